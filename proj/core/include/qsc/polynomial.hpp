#pragma once

#include <compare>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "qsc/combinatorics.hpp"

namespace qsc {

// Exponent vector over x_1..x_nvars.  The all-zero vector is the unit.
class Monomial {
 public:
  explicit Monomial(int nvars);
  explicit Monomial(std::vector<int> exponents);

  int nvars() const { return static_cast<int>(exponents_.size()); }
  int exponent(int var) const;  // var is 1-based
  const std::vector<int>& exponents() const { return exponents_; }

  int degree() const;
  bool is_unit() const;

  Monomial operator*(const Monomial& other) const;
  // Image under x_i -> x_{nvars+1-i}: the exponent vector read backwards.
  Monomial reversed() const;

  bool operator==(const Monomial&) const = default;

  std::string to_string() const;  // "x1*x3^2", "1" for the unit

 private:
  std::vector<int> exponents_;
};

// Lexicographic order with x_1 most significant.
std::strong_ordering lex_compare(const Monomial& a, const Monomial& b);
// Lexicographic order with x_nvars most significant (the mirrored order).
std::strong_ordering reversed_lex_compare(const Monomial& a, const Monomial& b);

struct Term {
  Monomial monomial;
  mpz_class coefficient;

  bool operator==(const Term&) const = default;
};

// Sparse polynomial with exact integer coefficients.  Terms are kept sorted
// lex-descending with no zero coefficients, so equality is structural and the
// leading term is terms().front().
class Polynomial {
 public:
  static Polynomial zero(int nvars);
  static Polynomial constant(int nvars, const mpz_class& c);
  static Polynomial variable(int nvars, int index);  // x_index
  static Polynomial from_monomial(const Monomial& m, const mpz_class& c = 1);
  static Polynomial from_terms(int nvars, std::vector<Term> terms);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  mpz_class coefficient(const Monomial& m) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator*(const mpz_class& c) const;
  // Multiplication by a single monomial preserves the term order.
  Polynomial times(const Monomial& m) const;

  bool operator==(const Polynomial&) const = default;

  bool is_homogeneous() const;
  // Total degree of the lex-leading term; -1 for the zero polynomial.
  int degree() const;

  std::string to_string() const;

 private:
  Polynomial(int nvars, std::vector<Term> terms)
      : nvars_(nvars), terms_(std::move(terms)) {}
  int nvars_;
  std::vector<Term> terms_;
};

// Negative diagonals carry the constant 1; Positive(i,j) carries x_i - x_{j+1}.
Polynomial diagonal_polynomial(const Diagonal& d, int n);

// B_T: the product of the diagonal polynomials of T, in n+1 variables.
// Homogeneous of degree = number of positive diagonals.
Polynomial basis_polynomial(const Triangulation& t);

// M_D: one factor x_k per Up step preceded by exactly k >= 1 Down steps.
// Lives in n+1 variables but never uses x_{n+1}.
Monomial dyck_monomial(const DyckPath& d);

// Lex-greatest monomial with nonzero coefficient.  Throws on zero.
const Monomial& leading_monomial(const Polynomial& p);
// Greatest monomial under the mirrored order x_{n+1} >> ... >> x_1.
const Monomial& reversed_leading_monomial(const Polynomial& p);

// The involution x_i -> x_{n+2-i} applied to every term.
Polynomial reverse_variables(const Polynomial& p);

// Checks leading_monomial(B_T) == M_{D(T)} over all T of size n.
bool verify_leading_monomials(int n);

// The per-piece factors of B_T from the decomposition at B: the left piece
// contributes the product of its positive-diagonal binomials; the piece at
// offset c contributes (x_{c+1} - x_{n+1}) times one binomial per piece
// diagonal, with indices shifted back to the ambient variables.  The factors
// multiply to B_T.  Throws when T has no diagonal at B.
std::vector<Polynomial> piece_factorization(const Triangulation& t);

// All monomials of the given total degree in nvars variables, lex-descending.
std::vector<Monomial> monomials_of_degree(int nvars, int degree);

}  // namespace qsc
