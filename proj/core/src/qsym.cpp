#include "qsc/qsym.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "qsc/bijection.hpp"

namespace qsc {

namespace {

[[noreturn]] void fail(const std::string& message) {
  throw std::invalid_argument(message);
}

}  // namespace

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) fail("composition must have at least one part");
  for (const int p : parts_)
    if (p < 1) fail("composition parts must be positive");
}

int Composition::weight() const {
  int sum = 0;
  for (const int p : parts_) sum += p;
  return sum;
}

std::string Composition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

namespace {

void grow_compositions(int remaining, int parts_left, std::vector<int>& prefix,
                       std::vector<Composition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  if (parts_left == 0) return;
  for (int first = remaining; first >= 1; --first) {
    prefix.push_back(first);
    grow_compositions(remaining - first, parts_left - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Composition> enumerate_compositions(int total, int max_parts) {
  if (total < 1) fail("enumerate_compositions requires total >= 1");
  if (max_parts < 1) fail("enumerate_compositions requires max_parts >= 1");
  std::vector<Composition> out;
  std::vector<int> prefix;
  grow_compositions(total, max_parts, prefix, out);
  return out;
}

namespace {

void grow_supports(int nvars, const std::vector<int>& parts, std::size_t next,
                   int min_var, std::vector<int>& exps, std::vector<Term>& terms) {
  if (next == parts.size()) {
    terms.push_back(Term{Monomial(exps), 1});
    return;
  }
  const int slots_needed = static_cast<int>(parts.size() - next);
  for (int var = min_var; var <= nvars - slots_needed + 1; ++var) {
    exps[static_cast<std::size_t>(var - 1)] = parts[next];
    grow_supports(nvars, parts, next + 1, var + 1, exps, terms);
    exps[static_cast<std::size_t>(var - 1)] = 0;
  }
}

}  // namespace

Polynomial monomial_qsym(const Composition& alpha, int nvars) {
  if (alpha.length() > nvars)
    fail("composition " + alpha.to_string() + " has more parts than variables (" +
         std::to_string(nvars) + ")");
  std::vector<Term> terms;
  std::vector<int> exps(static_cast<std::size_t>(nvars), 0);
  grow_supports(nvars, alpha.parts(), 0, 1, exps, terms);
  return Polynomial::from_terms(nvars, std::move(terms));
}

bool is_quasi_symmetric(const Polynomial& p) {
  // Group the terms by the sequence of nonzero exponents read left to right;
  // each group must be complete (one term per increasing index tuple) with a
  // single shared coefficient.
  std::map<std::vector<int>, std::pair<std::size_t, mpz_class>> groups;
  for (const Term& t : p.terms()) {
    std::vector<int> pattern;
    for (const int e : t.monomial.exponents())
      if (e != 0) pattern.push_back(e);
    auto [it, inserted] =
        groups.emplace(std::move(pattern), std::make_pair(std::size_t{1}, t.coefficient));
    if (!inserted) {
      if (it->second.second != t.coefficient) return false;
      ++it->second.first;
    }
  }
  const int nvars = p.nvars();
  for (const auto& [pattern, seen] : groups) {
    // C(nvars, len) placements of the pattern
    mpz_class expected;
    mpz_bin_uiui(expected.get_mpz_t(), static_cast<unsigned long>(nvars),
                 static_cast<unsigned long>(pattern.size()));
    if (mpz_class(static_cast<unsigned long>(seen.first)) != expected) return false;
  }
  return true;
}

EchelonForm::EchelonForm(int cols) : cols_(cols), pivot_of_col_(cols, -1) {
  if (cols < 0) fail("EchelonForm needs cols >= 0");
}

namespace {

// Divide the row by the gcd of its entries and make the leading entry positive.
void strip_content(std::vector<mpz_class>& row, int from) {
  mpz_class content = 0;
  int lead = -1;
  for (std::size_t c = static_cast<std::size_t>(from); c < row.size(); ++c) {
    if (row[c] == 0) continue;
    if (lead < 0) lead = static_cast<int>(c);
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), row[c].get_mpz_t());
    if (content == 1) break;
  }
  if (lead < 0) return;
  if (row[static_cast<std::size_t>(lead)] < 0) content = -content;
  if (content != 1)
    for (std::size_t c = static_cast<std::size_t>(lead); c < row.size(); ++c)
      if (row[c] != 0)
        mpz_divexact(row[c].get_mpz_t(), row[c].get_mpz_t(), content.get_mpz_t());
}

int first_nonzero(const std::vector<mpz_class>& row, int from) {
  for (std::size_t c = static_cast<std::size_t>(from); c < row.size(); ++c)
    if (row[c] != 0) return static_cast<int>(c);
  return static_cast<int>(row.size());
}

// row = pivot_lead * row - row[col] * pivot, entries at columns >= col.
void reduce_against(std::vector<mpz_class>& row, const std::vector<mpz_class>& pivot,
                    int col) {
  const mpz_class a = pivot[static_cast<std::size_t>(col)];
  const mpz_class b = row[static_cast<std::size_t>(col)];
  for (std::size_t c = static_cast<std::size_t>(col); c < row.size(); ++c)
    row[c] = a * row[c] - b * pivot[c];
}

}  // namespace

bool EchelonForm::insert(std::vector<mpz_class> row) {
  if (static_cast<int>(row.size()) != cols_)
    fail("row length " + std::to_string(row.size()) + " does not match cols " +
         std::to_string(cols_));
  int col = first_nonzero(row, 0);
  while (col < cols_) {
    const int r = pivot_of_col_[static_cast<std::size_t>(col)];
    if (r < 0) break;
    reduce_against(row, rows_[static_cast<std::size_t>(r)], col);
    strip_content(row, col);
    col = first_nonzero(row, col);
  }
  if (col >= cols_) return false;
  strip_content(row, col);
  pivot_of_col_[static_cast<std::size_t>(col)] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(row));
  lead_.push_back(col);
  return true;
}

std::vector<std::vector<mpz_class>> EchelonForm::reduced_rows() const {
  std::vector<std::size_t> order(rows_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [this](std::size_t a, std::size_t b) { return lead_[a] < lead_[b]; });

  std::vector<std::vector<mpz_class>> rows;
  std::vector<int> leads;
  rows.reserve(order.size());
  for (const std::size_t i : order) {
    rows.push_back(rows_[i]);
    leads.push_back(lead_[i]);
  }
  // Back-substitute from the last pivot up; later rows are already clean.
  for (int i = static_cast<int>(rows.size()) - 1; i >= 0; --i) {
    for (std::size_t j = static_cast<std::size_t>(i) + 1; j < rows.size(); ++j) {
      const int col = leads[j];
      if (rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] == 0)
        continue;
      const mpz_class a = rows[j][static_cast<std::size_t>(col)];
      const mpz_class b = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)];
      auto& row = rows[static_cast<std::size_t>(i)];
      for (std::size_t c = static_cast<std::size_t>(leads[static_cast<std::size_t>(i)]);
           c < row.size(); ++c)
        row[c] = a * row[c] - b * rows[j][c];
      strip_content(row, leads[static_cast<std::size_t>(i)]);
    }
  }
  return rows;
}

int exact_rank(int cols, const std::vector<std::vector<mpz_class>>& rows) {
  EchelonForm echelon(cols);
  for (const auto& row : rows) {
    echelon.insert(row);
    if (echelon.rank() == cols) break;
  }
  return echelon.rank();
}

std::vector<mpz_class> coefficient_row(const Polynomial& p,
                                       const std::vector<Monomial>& columns) {
  std::vector<mpz_class> row(columns.size(), 0);
  std::size_t col = 0;
  for (const Term& t : p.terms()) {  // both lists are lex-descending
    while (col < columns.size() && !(columns[col] == t.monomial)) ++col;
    if (col == columns.size())
      fail("polynomial term " + t.monomial.to_string() +
           " is not among the expected columns");
    row[col] = t.coefficient;
  }
  return row;
}

std::vector<Polynomial> ideal_spanning_set(int n, int degree) {
  if (n < 0 || degree < 0) fail("ideal_spanning_set requires n >= 0 and degree >= 0");
  const int nvars = n + 1;
  std::vector<Polynomial> out;
  for (int weight = 1; weight <= degree; ++weight) {
    for (const Composition& alpha : enumerate_compositions(weight, nvars)) {
      if (alpha.length() > nvars) continue;
      const Polynomial generator = monomial_qsym(alpha, nvars);
      for (const Monomial& beta : monomials_of_degree(nvars, degree - weight))
        out.push_back(generator.times(beta));
    }
  }
  return out;
}

namespace {

EchelonForm ideal_echelon(int n, int degree, const std::vector<Monomial>& columns) {
  EchelonForm echelon(static_cast<int>(columns.size()));
  const int nvars = n + 1;
  for (int weight = 1; weight <= degree; ++weight) {
    for (const Composition& alpha : enumerate_compositions(weight, nvars)) {
      const Polynomial generator = monomial_qsym(alpha, nvars);
      for (const Monomial& beta : monomials_of_degree(nvars, degree - weight)) {
        echelon.insert(coefficient_row(generator.times(beta), columns));
        if (echelon.rank() == echelon.cols()) return echelon;
      }
    }
  }
  return echelon;
}

}  // namespace

std::vector<std::vector<mpz_class>> ideal_graded_basis(int n, int degree) {
  const auto columns = monomials_of_degree(n + 1, degree);
  return ideal_echelon(n, degree, columns).reduced_rows();
}

bool GradedBasisReport::all_independent() const {
  return std::all_of(per_degree.begin(), per_degree.end(),
                     [](const DegreeReport& r) { return r.independent; });
}

GradedBasisReport certify_family(int n, int max_degree,
                                 const std::vector<Polynomial>& family) {
  if (n < 0 || max_degree < 0) fail("certify_family requires n >= 0, max_degree >= 0");
  std::vector<std::vector<const Polynomial*>> by_degree(
      static_cast<std::size_t>(max_degree) + 1);
  for (const Polynomial& f : family) {
    if (f.nvars() != n + 1)
      fail("family member in " + std::to_string(f.nvars()) +
           " variables, expected " + std::to_string(n + 1));
    if (f.is_zero() || !f.is_homogeneous())
      fail("family members must be nonzero and homogeneous: " + f.to_string());
    const int d = f.degree();
    if (d <= max_degree) by_degree[static_cast<std::size_t>(d)].push_back(&f);
  }

  GradedBasisReport report;
  report.n = n;
  for (int d = 0; d <= max_degree; ++d) {
    const auto columns = monomials_of_degree(n + 1, d);
    EchelonForm echelon = ideal_echelon(n, d, columns);
    DegreeReport row;
    row.degree = d;
    row.dim_ring = static_cast<std::int64_t>(columns.size());
    row.dim_ideal = echelon.rank();
    row.dim_quotient = row.dim_ring - row.dim_ideal;
    const auto& members = by_degree[static_cast<std::size_t>(d)];
    row.family_count = static_cast<std::int64_t>(members.size());
    std::int64_t grew = 0;
    for (const Polynomial* f : members)
      if (echelon.insert(coefficient_row(*f, columns))) ++grew;
    row.independent =
        grew == row.family_count && row.dim_quotient == row.family_count;
    report.per_degree.push_back(row);
    report.total_quotient_dim += row.dim_quotient;
  }
  report.total_is_catalan =
      mpz_class(static_cast<long>(report.total_quotient_dim)) == catalan(n + 1);
  return report;
}

GradedBasisReport quotient_dimensions(int n, int max_degree) {
  if (n < 0 || max_degree < 0)
    fail("quotient_dimensions requires n >= 0, max_degree >= 0");
  GradedBasisReport report;
  report.n = n;
  for (int d = 0; d <= max_degree; ++d) {
    const auto columns = monomials_of_degree(n + 1, d);
    const EchelonForm echelon = ideal_echelon(n, d, columns);
    DegreeReport row;
    row.degree = d;
    row.dim_ring = static_cast<std::int64_t>(columns.size());
    row.dim_ideal = echelon.rank();
    row.dim_quotient = row.dim_ring - row.dim_ideal;
    row.family_count = 0;
    row.independent = true;
    report.per_degree.push_back(row);
    report.total_quotient_dim += row.dim_quotient;
  }
  report.total_is_catalan =
      mpz_class(static_cast<long>(report.total_quotient_dim)) == catalan(n + 1);
  return report;
}

GradedBasisReport verify_basis(int n) { return verify_basis(n, n + 1); }

GradedBasisReport verify_basis(int n, int max_degree) {
  std::vector<Polynomial> family;
  for (const Triangulation& t : enumerate_triangulations(n))
    family.push_back(basis_polynomial(t));
  return certify_family(n, max_degree, family);
}

bool basis_certified(const GradedBasisReport& report) {
  if (static_cast<int>(report.per_degree.size()) != report.n + 2) return false;
  return report.all_independent() && report.total_is_catalan;
}

bool verify_monomial_basis(int n) {
  std::vector<Polynomial> dyck_family;
  for (const DyckPath& d : enumerate_dyck_paths(n))
    dyck_family.push_back(Polynomial::from_monomial(dyck_monomial(d)));
  const GradedBasisReport direct = certify_family(n, n, dyck_family);
  if (!direct.all_independent() || !direct.total_is_catalan) return false;

  std::vector<Polynomial> mirrored_family;
  for (const Triangulation& t : enumerate_triangulations(n))
    mirrored_family.push_back(
        Polynomial::from_monomial(reversed_leading_monomial(basis_polynomial(t))));
  const GradedBasisReport mirrored = certify_family(n, n, mirrored_family);
  return mirrored.all_independent() && mirrored.total_is_catalan;
}

}  // namespace qsc
