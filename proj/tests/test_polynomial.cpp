#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <stdexcept>
#include <vector>

#include "qsc/bijection.hpp"
#include "qsc/polynomial.hpp"

using namespace qsc;

namespace {

Triangulation worked_triangulation() {
  return Triangulation(5, {Diagonal::positive(1, 1), Diagonal::negative(2),
                           Diagonal::positive(3, 3), Diagonal::positive(3, 5),
                           Diagonal::positive(5, 5)});
}

Monomial mono(std::vector<int> exps) { return Monomial(std::move(exps)); }

// Independent oracle: expand a product of (x_a - x_b) factors with a plain
// map-based convolution, no Polynomial machinery.
using NaivePoly = std::map<std::vector<int>, long>;

NaivePoly naive_binomial(int nvars, int a, int b) {
  NaivePoly p;
  std::vector<int> ea(nvars, 0), eb(nvars, 0);
  ea[a - 1] = 1;
  eb[b - 1] = 1;
  p[ea] = 1;
  p[eb] = -1;
  return p;
}

NaivePoly naive_mul(const NaivePoly& p, const NaivePoly& q, int nvars) {
  NaivePoly out;
  for (const auto& [me, mc] : p)
    for (const auto& [ne, nc] : q) {
      std::vector<int> exps(nvars);
      for (int i = 0; i < nvars; ++i) exps[i] = me[i] + ne[i];
      out[exps] += mc * nc;
    }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

NaivePoly to_naive(const Polynomial& p) {
  NaivePoly out;
  for (const Term& t : p.terms())
    out[t.monomial.exponents()] = static_cast<long>(t.coefficient.get_si());
  return out;
}

}  // namespace

TEST_CASE("polynomial arithmetic canonical form") {
  const Polynomial x1 = Polynomial::variable(3, 1);
  const Polynomial x2 = Polynomial::variable(3, 2);
  CHECK((x1 - x1).is_zero());
  CHECK((x1 + x2) == (x2 + x1));
  CHECK(((x1 + x2) * (x1 - x2)) == (x1 * x1 - x2 * x2));
  CHECK((x1 * x2).terms().size() == 1);
  const Polynomial sq = (x1 - x2) * (x1 - x2);
  CHECK(sq.coefficient(mono({1, 1, 0})) == -2);
  CHECK(sq.to_string() == "x1^2 - 2*x1*x2 + x2^2");
  CHECK(Polynomial::zero(3).to_string() == "0");
  CHECK(Polynomial::constant(3, -4).to_string() == "-4");
}

TEST_CASE("lex_compare") {
  CHECK(lex_compare(mono({1, 0}), mono({0, 1})) == std::strong_ordering::greater);
  CHECK(lex_compare(mono({1, 0, 2, 0, 1, 0}), mono({1, 0, 1, 1, 1, 0})) ==
        std::strong_ordering::greater);
  CHECK(lex_compare(mono({1, 2}), mono({1, 2})) == std::strong_ordering::equal);
}

TEST_CASE("leading_monomial") {
  const Polynomial p = Polynomial::variable(2, 1) - Polynomial::variable(2, 2);
  CHECK(leading_monomial(p) == mono({1, 0}));
  CHECK(leading_monomial(Polynomial::constant(2, 1)) == mono({0, 0}));
  CHECK_THROWS_AS(leading_monomial(Polynomial::zero(2)), std::invalid_argument);
}

TEST_CASE("diagonal_polynomial") {
  CHECK(diagonal_polynomial(Diagonal::negative(3), 5) == Polynomial::constant(6, 1));
  CHECK(diagonal_polynomial(Diagonal::positive(3, 5), 5) ==
        Polynomial::variable(6, 3) - Polynomial::variable(6, 6));
  CHECK(diagonal_polynomial(Diagonal::positive(1, 1), 1) ==
        Polynomial::variable(2, 1) - Polynomial::variable(2, 2));
}

TEST_CASE("basis_polynomial small cases") {
  for (int n = 0; n <= 4; ++n)
    CHECK(basis_polynomial(fan_triangulation(n)) == Polynomial::constant(n + 1, 1));
  CHECK(basis_polynomial(Triangulation(1, {Diagonal::positive(1, 1)})) ==
        Polynomial::variable(2, 1) - Polynomial::variable(2, 2));
}

TEST_CASE("worked-example basis polynomial matches a naive expansion") {
  const Polynomial b = basis_polynomial(worked_triangulation());
  NaivePoly expected = naive_binomial(6, 1, 2);
  expected = naive_mul(expected, naive_binomial(6, 3, 4), 6);
  expected = naive_mul(expected, naive_binomial(6, 3, 6), 6);
  expected = naive_mul(expected, naive_binomial(6, 5, 6), 6);
  CHECK(to_naive(b) == expected);
  CHECK(b.terms().size() == 16);
  CHECK(leading_monomial(b) == mono({1, 0, 2, 0, 1, 0}));
}

TEST_CASE("dyck_monomial") {
  CHECK(dyck_monomial(DyckPath("UUDD")).is_unit());
  CHECK(dyck_monomial(DyckPath("UDUD")) == mono({1, 0}));
  CHECK(dyck_monomial(DyckPath("UUDUDDUUDDUD")) == mono({1, 0, 2, 0, 1, 0}));
}

TEST_CASE("dyck monomials avoid the last variable and respect the ascent") {
  for (int n = 0; n <= 6; ++n) {
    for (const DyckPath& d : enumerate_dyck_paths(n)) {
      const Monomial m = dyck_monomial(d);
      CHECK(m.nvars() == n + 1);
      CHECK(m.exponent(n + 1) == 0);
      CHECK(m.degree() <= n);
      CHECK(m.degree() == (n + 1) - initial_ascent(d));
    }
  }
}

TEST_CASE("reverse_variables") {
  CHECK(reverse_variables(Polynomial::variable(2, 1)) == Polynomial::variable(2, 2));
  const Polynomial p = Polynomial::variable(2, 1) - Polynomial::variable(2, 2);
  CHECK(reverse_variables(p) == -p);
  for (int n = 0; n <= 4; ++n)
    for (const Triangulation& t : enumerate_triangulations(n)) {
      const Polynomial b = basis_polynomial(t);
      CHECK(reverse_variables(reverse_variables(b)) == b);
    }
}

TEST_CASE("involution sign law") {
  for (int n = 0; n <= 5; ++n) {
    for (const Triangulation& t : enumerate_triangulations(n)) {
      const Polynomial lhs = reverse_variables(basis_polynomial(t));
      const Polynomial rhs = basis_polynomial(reflect(t));
      if (t.positive_count() % 2 == 0)
        CHECK(lhs == rhs);
      else
        CHECK(lhs == -rhs);
    }
  }
}

TEST_CASE("B_T is homogeneous of degree positive_count") {
  for (int n = 0; n <= 5; ++n)
    for (const Triangulation& t : enumerate_triangulations(n)) {
      const Polynomial b = basis_polynomial(t);
      CHECK(b.is_homogeneous());
      CHECK(b.degree() == t.positive_count());
    }
}

TEST_CASE("verify_leading_monomials") {
  CHECK(verify_leading_monomials(0));
  for (int n = 1; n <= 5; ++n) CHECK(verify_leading_monomials(n));
}

TEST_CASE("leading monomial under the mirrored order") {
  for (int n = 0; n <= 5; ++n) {
    for (const Triangulation& t : enumerate_triangulations(n)) {
      const Monomial lhs = reversed_leading_monomial(basis_polynomial(t));
      const Monomial rhs =
          dyck_monomial(triangulation_to_dyck(reflect(t))).reversed();
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("piece_factorization examples") {
  CHECK_THROWS_AS(piece_factorization(fan_triangulation(2)), std::invalid_argument);

  const auto square = piece_factorization(Triangulation(1, {Diagonal::positive(1, 1)}));
  REQUIRE(square.size() == 2);
  CHECK(square[0] == Polynomial::constant(2, 1));
  CHECK(square[1] == Polynomial::variable(2, 1) - Polynomial::variable(2, 2));

  const auto factors = piece_factorization(worked_triangulation());
  REQUIRE(factors.size() == 3);
  auto x = [](int i) { return Polynomial::variable(6, i); };
  CHECK(factors[0] == x(1) - x(2));
  CHECK(factors[1] == (x(3) - x(6)) * (x(3) - x(4)));
  CHECK(factors[2] == x(5) - x(6));
}

TEST_CASE("piece factors multiply back to B_T") {
  for (int n = 1; n <= 5; ++n) {
    for (const Triangulation& t : enumerate_triangulations(n)) {
      if (diagonals_at_star(t).empty()) continue;
      Polynomial product = Polynomial::constant(n + 1, 1);
      for (const Polynomial& f : piece_factorization(t)) product = product * f;
      CHECK(product == basis_polynomial(t));
    }
  }
}

TEST_CASE("monomials_of_degree is lex-descending and complete") {
  const auto degree2 = monomials_of_degree(2, 2);
  REQUIRE(degree2.size() == 3);
  CHECK(degree2[0] == mono({2, 0}));
  CHECK(degree2[1] == mono({1, 1}));
  CHECK(degree2[2] == mono({0, 2}));
  const auto degree3 = monomials_of_degree(3, 3);
  CHECK(degree3.size() == 10);
  for (std::size_t i = 1; i < degree3.size(); ++i)
    CHECK(lex_compare(degree3[i - 1], degree3[i]) == std::strong_ordering::greater);
}
