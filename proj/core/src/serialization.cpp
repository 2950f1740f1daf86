#include "qsc/serialization.hpp"

#include <cstdint>
#include <stdexcept>

#include "json.hpp"

namespace qsc {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json diagonal_value(const Diagonal& d) {
  if (d.is_negative()) return ordered_json::array({"N", d.fan_index()});
  return ordered_json::array({"P", d.low(), d.high()});
}

ordered_json triangulation_value(const Triangulation& t) {
  ordered_json diagonals = ordered_json::array();
  for (const Diagonal& d : t.diagonals()) diagonals.push_back(diagonal_value(d));
  return ordered_json{{"n", t.size()}, {"diagonals", diagonals}};
}

// Coefficients that fit an int64 are emitted as numbers, larger ones as
// decimal strings.
ordered_json coefficient_value(const mpz_class& c) {
  if (c.fits_slong_p()) return static_cast<std::int64_t>(c.get_si());
  return c.get_str();
}

ordered_json polynomial_value(const Polynomial& p) {
  ordered_json terms = ordered_json::array();
  for (const Term& t : p.terms())
    terms.push_back(
        ordered_json::array({coefficient_value(t.coefficient), t.monomial.exponents()}));
  return terms;
}

Diagonal parse_diagonal(const ordered_json& value) {
  if (!value.is_array() || value.empty() || !value[0].is_string())
    throw std::invalid_argument(
        "diagonal must be [\"N\",k] or [\"P\",i,j], got " + value.dump());
  const std::string kind = value[0].get<std::string>();
  if (kind == "N") {
    if (value.size() != 2 || !value[1].is_number_integer())
      throw std::invalid_argument("negative diagonal must be [\"N\",k], got " +
                                  value.dump());
    return Diagonal::negative(value[1].get<int>());
  }
  if (kind == "P") {
    if (value.size() != 3 || !value[1].is_number_integer() ||
        !value[2].is_number_integer())
      throw std::invalid_argument("positive diagonal must be [\"P\",i,j], got " +
                                  value.dump());
    return Diagonal::positive(value[1].get<int>(), value[2].get<int>());
  }
  throw std::invalid_argument("unknown diagonal kind \"" + kind + "\"");
}

}  // namespace

std::string to_json(const Diagonal& d) { return diagonal_value(d).dump(); }

std::string to_json(const Triangulation& t) { return triangulation_value(t).dump(); }

std::string to_json(const DyckPath& d) { return ordered_json(d.steps()).dump(); }

std::string to_json(const Monomial& m) { return ordered_json(m.exponents()).dump(); }

std::string to_json(const Polynomial& p) { return polynomial_value(p).dump(); }

std::string to_json(const GradedBasisReport& report) {
  ordered_json degrees = ordered_json::array();
  for (const DegreeReport& row : report.per_degree)
    degrees.push_back(ordered_json{{"degree", row.degree},
                                   {"dim_ring", row.dim_ring},
                                   {"dim_ideal", row.dim_ideal},
                                   {"dim_quotient", row.dim_quotient},
                                   {"family_count", row.family_count},
                                   {"independent", row.independent}});
  return ordered_json{{"n", report.n},
                      {"per_degree", degrees},
                      {"total_quotient_dim", report.total_quotient_dim},
                      {"total_is_catalan", report.total_is_catalan}}
      .dump();
}

Triangulation triangulation_from_json(const std::string& text, std::optional<int> n) {
  ordered_json value;
  try {
    value = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("triangulation is not valid JSON: ") +
                                e.what());
  }
  ordered_json diagonals;
  int size = 0;
  if (value.is_object()) {
    if (!value.contains("n") || !value["n"].is_number_integer())
      throw std::invalid_argument("triangulation object needs an integer field \"n\"");
    if (!value.contains("diagonals") || !value["diagonals"].is_array())
      throw std::invalid_argument("triangulation object needs an array field \"diagonals\"");
    size = value["n"].get<int>();
    if (n && *n != size)
      throw std::invalid_argument("triangulation has n=" + std::to_string(size) +
                                  " but n=" + std::to_string(*n) + " was requested");
    diagonals = value["diagonals"];
  } else if (value.is_array()) {
    if (!n)
      throw std::invalid_argument(
          "a bare diagonals array needs the polygon size n to be supplied");
    size = *n;
    diagonals = value;
  } else {
    throw std::invalid_argument(
        "triangulation must be an object or a diagonals array, got " + value.dump());
  }
  std::vector<Diagonal> parsed;
  for (const auto& entry : diagonals) parsed.push_back(parse_diagonal(entry));
  return Triangulation(size, std::move(parsed));
}

std::string to_text_table(const GradedBasisReport& report) {
  auto pad = [](const std::string& s, std::size_t width) {
    return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
  };
  std::string out = "degree  dim R  dim I  dim Q  family  status\n";
  for (const DegreeReport& row : report.per_degree) {
    out += pad(std::to_string(row.degree), 6) + "  ";
    out += pad(std::to_string(row.dim_ring), 5) + "  ";
    out += pad(std::to_string(row.dim_ideal), 5) + "  ";
    out += pad(std::to_string(row.dim_quotient), 5) + "  ";
    out += pad(std::to_string(row.family_count), 6) + "  ";
    out += row.independent ? "OK" : "FAIL";
    out += "\n";
  }
  out += "total quotient dimension = " + std::to_string(report.total_quotient_dim) +
         " (catalan(" + std::to_string(report.n + 1) + ") = " +
         catalan(report.n + 1).get_str() + ")\n";
  return out;
}

}  // namespace qsc
