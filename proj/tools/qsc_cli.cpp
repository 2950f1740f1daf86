// qsc: enumeration, the triangulation<->Dyck bijection, B_T / M_D
// construction, and the exact basis certificates, from the command line.

#include <cstdlib>
#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qsc/bijection.hpp"
#include "qsc/qsym.hpp"
#include "qsc/serialization.hpp"

using namespace qsc;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsageError = 2;
constexpr int kBasisBudgetLimit = 6;  // exact rank certificates beyond this refuse

int worker_count() {
  const char* env = std::getenv("QSC_WORKERS");
  if (env == nullptr) return 1;
  const int value = std::atoi(env);
  return value < 1 ? 1 : (value > 256 ? 256 : value);
}

// Applies `check` to every item, fanning out across QSC_WORKERS threads.
// Failure messages come back in item order no matter how the chunks finish.
template <typename Item, typename Check>
std::vector<std::string> collect_failures(const std::vector<Item>& items,
                                          Check check) {
  const int workers = worker_count();
  auto run_range = [&](std::size_t begin, std::size_t end) {
    std::vector<std::string> failures;
    for (std::size_t i = begin; i < end; ++i)
      if (auto message = check(items[i])) failures.push_back(*message);
    return failures;
  };
  if (workers <= 1 || items.size() < 2) return run_range(0, items.size());

  std::vector<std::future<std::vector<std::string>>> futures;
  const std::size_t chunk = (items.size() + workers - 1) / workers;
  for (std::size_t begin = 0; begin < items.size(); begin += chunk) {
    const std::size_t end = std::min(begin + chunk, items.size());
    futures.push_back(
        std::async(std::launch::async, run_range, begin, end));
  }
  std::vector<std::string> failures;
  for (auto& f : futures) {
    auto part = f.get();
    failures.insert(failures.end(), part.begin(), part.end());
  }
  return failures;
}

struct CheckOutcome {
  std::string name;
  std::size_t cases = 0;
  bool pass = false;
  std::vector<std::string> failures;
  std::optional<GradedBasisReport> report;
  std::optional<bool> monomial_basis_pass;
};

CheckOutcome run_leading(int n) {
  const auto triangulations = enumerate_triangulations(n);
  CheckOutcome out{"leading", triangulations.size(), false, {}, {}, {}};
  out.failures = collect_failures(
      triangulations, [](const Triangulation& t) -> std::optional<std::string> {
        const Monomial lead = leading_monomial(basis_polynomial(t));
        const Monomial column = dyck_monomial(triangulation_to_dyck(t));
        if (lead == column) return std::nullopt;
        return t.to_string() + ": leading " + lead.to_string() + " != " +
               column.to_string();
      });
  out.pass = out.failures.empty();
  return out;
}

CheckOutcome run_lemma(int n) {
  const auto triangulations = enumerate_triangulations(n);
  CheckOutcome out{"lemma", triangulations.size(), false, {}, {}, {}};
  out.failures = collect_failures(
      triangulations, [](const Triangulation& t) -> std::optional<std::string> {
        const int ascent = initial_ascent(triangulation_to_dyck(t));
        if (ascent == t.negative_count() + 1) return std::nullopt;
        return t.to_string() + ": ascent " + std::to_string(ascent) +
               " != negatives+1 = " + std::to_string(t.negative_count() + 1);
      });
  out.pass = out.failures.empty();
  return out;
}

CheckOutcome run_involution(int n) {
  const auto triangulations = enumerate_triangulations(n);
  CheckOutcome out{"involution", triangulations.size(), false, {}, {}, {}};
  out.failures = collect_failures(
      triangulations, [](const Triangulation& t) -> std::optional<std::string> {
        if (reflect(reflect(t)) != t)
          return t.to_string() + ": reflect is not an involution";
        const Polynomial b = basis_polynomial(t);
        if (reverse_variables(reverse_variables(b)) != b)
          return t.to_string() + ": reverse_variables is not an involution";
        const Polynomial mirrored = basis_polynomial(reflect(t));
        const Polynomial expected =
            t.positive_count() % 2 == 0 ? mirrored : -mirrored;
        if (reverse_variables(b) != expected)
          return t.to_string() + ": reverse(B_T) != (-1)^p B_{reflect(T)}";
        return std::nullopt;
      });
  out.pass = out.failures.empty();
  return out;
}

CheckOutcome run_basis(int n, int max_degree) {
  CheckOutcome out{"basis", 0, false, {}, {}, {}};
  const GradedBasisReport report = verify_basis(n, max_degree);
  out.cases = report.per_degree.size();
  const bool full_range = max_degree >= n + 1;
  const bool basis_ok =
      full_range ? basis_certified(report) : report.all_independent();
  for (const DegreeReport& row : report.per_degree)
    if (!row.independent)
      out.failures.push_back("degree " + std::to_string(row.degree) +
                             ": family of " + std::to_string(row.family_count) +
                             " vs quotient dimension " +
                             std::to_string(row.dim_quotient));
  out.report = report;
  out.monomial_basis_pass = verify_monomial_basis(n);
  out.pass = basis_ok && *out.monomial_basis_pass;
  return out;
}

ordered_json outcome_json(const CheckOutcome& outcome) {
  ordered_json value{{"check", outcome.name},
                     {"cases", outcome.cases},
                     {"pass", outcome.pass}};
  if (!outcome.failures.empty()) value["failures"] = outcome.failures;
  if (outcome.report)
    value["report"] = ordered_json::parse(to_json(*outcome.report));
  if (outcome.monomial_basis_pass)
    value["monomial_basis_pass"] = *outcome.monomial_basis_pass;
  return value;
}

void print_outcome_text(const CheckOutcome& outcome, int n) {
  if (outcome.report) {
    std::cout << "check basis: n=" << n << ": "
              << (outcome.pass ? "PASS" : "FAIL") << "\n"
              << to_text_table(*outcome.report)
              << "monomial bases (direct and mirrored): "
              << (*outcome.monomial_basis_pass ? "PASS" : "FAIL") << "\n";
    return;
  }
  std::cout << "check " << outcome.name << ": n=" << n << ": "
            << (outcome.pass ? "PASS" : "FAIL") << " (" << outcome.cases
            << " cases)\n";
  for (const std::string& failure : outcome.failures)
    std::cout << "  " << failure << "\n";
}

int run_verify(int n, const std::string& check, std::optional<int> max_degree,
               const std::string& format) {
  const bool wants_basis = check == "basis" || check == "all";
  if (wants_basis && n > kBasisBudgetLimit) {
    std::cerr << "verify --check " << check << ": n=" << n
              << " exceeds the exact-rank budget (configured limit n <= "
              << kBasisBudgetLimit << ")\n";
    return kExitUsageError;
  }
  std::vector<CheckOutcome> outcomes;
  if (check == "leading" || check == "all") outcomes.push_back(run_leading(n));
  if (check == "lemma" || check == "all") outcomes.push_back(run_lemma(n));
  if (check == "involution" || check == "all")
    outcomes.push_back(run_involution(n));
  if (wants_basis) outcomes.push_back(run_basis(n, max_degree.value_or(n + 1)));

  bool pass = true;
  for (const CheckOutcome& outcome : outcomes) pass = pass && outcome.pass;

  if (format == "json") {
    ordered_json checks = ordered_json::array();
    for (const CheckOutcome& outcome : outcomes)
      checks.push_back(outcome_json(outcome));
    std::cout << ordered_json{{"n", n}, {"checks", checks}, {"pass", pass}}.dump()
              << "\n";
  } else {
    for (const CheckOutcome& outcome : outcomes) print_outcome_text(outcome, n);
  }
  return pass ? 0 : kExitVerificationFailure;
}

int run_enumerate(int n, const std::string& kind, const std::string& format) {
  if (format == "json") {
    ordered_json items = ordered_json::array();
    if (kind == "triangulations") {
      for (const Triangulation& t : enumerate_triangulations(n))
        items.push_back(ordered_json::parse(to_json(t)));
    } else {
      for (const DyckPath& d : enumerate_dyck_paths(n)) items.push_back(d.steps());
    }
    std::cout << ordered_json{{"n", n},
                              {"kind", kind},
                              {"count", items.size()},
                              {"items", items}}
                     .dump()
              << "\n";
    return 0;
  }
  std::size_t count = 0;
  if (kind == "triangulations") {
    for (const Triangulation& t : enumerate_triangulations(n)) {
      std::cout << t.to_string() << "\n";
      ++count;
    }
  } else {
    for (const DyckPath& d : enumerate_dyck_paths(n)) {
      std::cout << d.steps() << "\n";
      ++count;
    }
  }
  std::cout << "count: " << count << "\n";
  return 0;
}

int run_bijection(std::optional<int> n, const std::string& triangulation_literal,
                  const std::string& path_literal, const std::string& format) {
  if (!triangulation_literal.empty()) {
    const Triangulation t = triangulation_from_json(triangulation_literal, n);
    const DyckPath d = triangulation_to_dyck(t);
    if (format == "json")
      std::cout << ordered_json{{"triangulation", ordered_json::parse(to_json(t))},
                                {"path", d.steps()}}
                       .dump()
                << "\n";
    else
      std::cout << d.steps() << "\n";
    return 0;
  }
  if (!path_literal.empty()) {
    const DyckPath d((std::string_view(path_literal)));
    const Triangulation t = dyck_to_triangulation(d);
    if (format == "json")
      std::cout << ordered_json{{"path", d.steps()},
                                {"triangulation", ordered_json::parse(to_json(t))}}
                       .dump()
                << "\n";
    else
      std::cout << to_json(t) << "\n";
    return 0;
  }
  if (!n) {
    std::cerr << "bijection needs --n for the full table, or an input literal\n";
    return kExitUsageError;
  }
  if (format == "json") {
    ordered_json rows = ordered_json::array();
    for (const Triangulation& t : enumerate_triangulations(*n))
      rows.push_back(
          ordered_json{{"triangulation", ordered_json::parse(to_json(t))},
                       {"path", triangulation_to_dyck(t).steps()}});
    std::cout << rows.dump() << "\n";
  } else {
    for (const Triangulation& t : enumerate_triangulations(*n))
      std::cout << t.to_string() << " -> " << triangulation_to_dyck(t).steps()
                << "\n";
  }
  return 0;
}

int run_poly(std::optional<int> n, const std::string& triangulation_literal,
             const std::string& format) {
  const Triangulation t = triangulation_from_json(triangulation_literal, n);
  const Polynomial b = basis_polynomial(t);
  const Monomial lead = leading_monomial(b);
  if (format == "json") {
    std::cout << ordered_json{{"triangulation", ordered_json::parse(to_json(t))},
                              {"polynomial", ordered_json::parse(to_json(b))},
                              {"leading", ordered_json::parse(to_json(lead))}}
                     .dump()
              << "\n";
  } else {
    std::cout << "B_T = " << b.to_string() << "\n"
              << "leading monomial: " << lead.to_string() << "\n";
  }
  return 0;
}

int run_monomial(const std::string& path_literal, const std::string& format) {
  const DyckPath d((std::string_view(path_literal)));
  const Monomial m = dyck_monomial(d);
  if (format == "json")
    std::cout << ordered_json{{"path", d.steps()},
                              {"monomial", ordered_json::parse(to_json(m))},
                              {"text", m.to_string()}}
                     .dump()
              << "\n";
  else
    std::cout << "M_D = " << m.to_string() << "\n";
  return 0;
}

int run_hilbert(int n, std::optional<int> max_degree, const std::string& format) {
  if (n > kBasisBudgetLimit) {
    std::cerr << "hilbert: n=" << n
              << " exceeds the exact-rank budget (configured limit n <= "
              << kBasisBudgetLimit << ")\n";
    return kExitUsageError;
  }
  const GradedBasisReport report = quotient_dimensions(n, max_degree.value_or(n + 1));
  if (format == "json")
    std::cout << to_json(report) << "\n";
  else
    std::cout << to_text_table(report);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"triangulation-indexed basis of the quasi-symmetric coinvariants"};
  app.require_subcommand(1);

  std::optional<int> n;
  std::string format = "text";
  std::string kind = "triangulations";
  std::string check = "all";
  std::string triangulation_literal;
  std::string path_literal;
  std::optional<int> max_degree;

  auto add_common = [&](CLI::App* cmd, bool n_required) {
    auto* opt = cmd->add_option("--n", n, "polygon size parameter (n >= 0)");
    opt->check(CLI::NonNegativeNumber);
    if (n_required) opt->required();
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* enumerate = app.add_subcommand("enumerate", "list triangulations or Dyck paths");
  add_common(enumerate, true);
  enumerate->add_option("--kind", kind, "what to enumerate")
      ->check(CLI::IsMember({"triangulations", "paths"}));

  CLI::App* bijection = app.add_subcommand(
      "bijection", "map the full table with --n, or one object either way");
  add_common(bijection, false);
  bijection->add_option("--triangulation", triangulation_literal,
                        "triangulation literal (JSON object or diagonals array)");
  bijection->add_option("--path", path_literal, "Dyck path literal, e.g. UUDD");

  CLI::App* poly = app.add_subcommand("poly", "expand B_T and its leading monomial");
  add_common(poly, false);
  poly->add_option("--triangulation", triangulation_literal,
                   "triangulation literal (JSON object or diagonals array)")
      ->required();

  CLI::App* monomial = app.add_subcommand("monomial", "the Dyck monomial M_D");
  monomial->add_option("--path", path_literal, "Dyck path literal, e.g. UUDD")
      ->required();
  monomial->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* verify = app.add_subcommand("verify", "run the verification suites");
  add_common(verify, true);
  verify->add_option("--check", check, "which check to run")
      ->check(CLI::IsMember({"leading", "basis", "lemma", "involution", "all"}));
  verify->add_option("--max-degree", max_degree,
                     "degree cap for the basis certificate (default n+1)");

  CLI::App* hilbert = app.add_subcommand("hilbert", "graded quotient dimensions");
  add_common(hilbert, true);
  hilbert->add_option("--max-degree", max_degree,
                      "highest degree to compute (default n+1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsageError;
  }

  try {
    if (enumerate->parsed()) return run_enumerate(*n, kind, format);
    if (bijection->parsed())
      return run_bijection(n, triangulation_literal, path_literal, format);
    if (poly->parsed()) return run_poly(n, triangulation_literal, format);
    if (monomial->parsed()) return run_monomial(path_literal, format);
    if (verify->parsed()) return run_verify(*n, check, max_degree, format);
    if (hilbert->parsed()) return run_hilbert(*n, max_degree, format);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsageError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitUsageError;
  }
  return kExitUsageError;
}
