#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "qsc/polynomial.hpp"

namespace qsc {

// A composition: a nonempty sequence of positive integers.
class Composition {
 public:
  explicit Composition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const;  // sum of parts

  bool operator==(const Composition&) const = default;

  std::string to_string() const;  // "(2,1)"

 private:
  std::vector<int> parts_;
};

// All compositions of `total` into at most `max_parts` parts.  First part
// descending, then recursively; (3), (2,1), (1,2), (1,1,1), ...
std::vector<Composition> enumerate_compositions(int total, int max_parts);

// The monomial quasi-symmetric polynomial M_alpha in `nvars` variables:
// sum over strictly increasing index tuples of x_{i_1}^{a_1}...x_{i_l}^{a_l}.
// Throws when alpha has more parts than nvars.
Polynomial monomial_qsym(const Composition& alpha, int nvars);

// The defining property: all monomials sharing one exponent sequence on
// increasing variable indices carry the same coefficient.
bool is_quasi_symmetric(const Polynomial& p);

// Fraction-free integer row echelon form.  Rows are reduced by cross
// multiplication and stripped of their content, so every entry stays an exact
// integer and the rank is certified without rounding or modular shortcuts.
class EchelonForm {
 public:
  explicit EchelonForm(int cols);

  // Reduces the row against the current pivots and absorbs what is left.
  // Returns true when the rank grew.
  bool insert(std::vector<mpz_class> row);

  int rank() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }

  // Canonical basis of the row space: fully reduced, content-free rows with
  // positive pivots, ordered by pivot column.
  std::vector<std::vector<mpz_class>> reduced_rows() const;

 private:
  int cols_;
  std::vector<std::vector<mpz_class>> rows_;
  std::vector<int> lead_;           // pivot column of rows_[r]
  std::vector<int> pivot_of_col_;   // column -> row index, -1 if none
};

// Exact rank of an arbitrary list of rows.
int exact_rank(int cols, const std::vector<std::vector<mpz_class>>& rows);

// Coefficients of p on the given columns (monomials, lex-descending).
// Throws if p has a term outside the column list.
std::vector<mpz_class> coefficient_row(const Polynomial& p,
                                       const std::vector<Monomial>& columns);

// The spanning set { x^beta * M_alpha : |alpha| >= 1, |alpha| + |beta| = d }
// of the degree-d slice of the quasi-symmetric ideal in n+1 variables.
std::vector<Polynomial> ideal_spanning_set(int n, int degree);

// Reduced echelon basis of the degree-d slice I_d, as coefficient vectors on
// monomials_of_degree(n+1, d).
std::vector<std::vector<mpz_class>> ideal_graded_basis(int n, int degree);

struct DegreeReport {
  int degree = 0;
  std::int64_t dim_ring = 0;      // dim R_d
  std::int64_t dim_ideal = 0;     // dim I_d
  std::int64_t dim_quotient = 0;  // dim R_d - dim I_d
  std::int64_t family_count = 0;  // candidate basis elements of this degree
  bool independent = false;       // family free mod I_d and count == dim Q_d

  bool operator==(const DegreeReport&) const = default;
};

struct GradedBasisReport {
  int n = 0;
  std::vector<DegreeReport> per_degree;
  std::int64_t total_quotient_dim = 0;
  bool total_is_catalan = false;  // total == c_{n+1}

  bool all_independent() const;

  bool operator==(const GradedBasisReport&) const = default;
};

// Rank-certifies a family of homogeneous polynomials degree by degree against
// the quasi-symmetric ideal: for each d <= max_degree the family members of
// degree d must stay independent modulo I_d and match dim Q_d in number.
GradedBasisReport certify_family(int n, int max_degree,
                                 const std::vector<Polynomial>& family);

// Graded dimensions only (family columns left at zero, independent = true).
GradedBasisReport quotient_dimensions(int n, int max_degree);

// The basis certificate for {B_T}: degrees 0..max_degree, default n+1 so the
// vanishing of dim Q_{n+1} is probed as well.
GradedBasisReport verify_basis(int n);
GradedBasisReport verify_basis(int n, int max_degree);

// True when the report covers degrees 0..n+1, every degree is independent,
// and the total quotient dimension is c_{n+1}.
bool basis_certified(const GradedBasisReport& report);

// Certifies the two monomial families: the Dyck monomials M_D, and the
// leading monomials of the B_T under the mirrored variable order.
bool verify_monomial_basis(int n);

}  // namespace qsc
