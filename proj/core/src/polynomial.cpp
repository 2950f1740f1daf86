#include "qsc/polynomial.hpp"

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

Monomial::Monomial(int nvars) : exponents_(static_cast<std::size_t>(nvars), 0) {
  if (nvars < 1) fail("monomial needs at least one variable");
}

Monomial::Monomial(std::vector<int> exponents) : exponents_(std::move(exponents)) {
  if (exponents_.empty()) fail("monomial needs at least one variable");
  for (const int e : exponents_)
    if (e < 0) fail("monomial exponents must be non-negative");
}

int Monomial::exponent(int var) const {
  if (var < 1 || var > nvars())
    fail("variable index " + std::to_string(var) + " out of range 1.." +
         std::to_string(nvars()));
  return exponents_[static_cast<std::size_t>(var - 1)];
}

int Monomial::degree() const {
  int sum = 0;
  for (const int e : exponents_) sum += e;
  return sum;
}

bool Monomial::is_unit() const {
  return std::all_of(exponents_.begin(), exponents_.end(),
                     [](int e) { return e == 0; });
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (nvars() != other.nvars()) fail("monomial product across variable counts");
  std::vector<int> exps(exponents_);
  for (std::size_t i = 0; i < exps.size(); ++i) exps[i] += other.exponents_[i];
  return Monomial(std::move(exps));
}

Monomial Monomial::reversed() const {
  std::vector<int> exps(exponents_.rbegin(), exponents_.rend());
  return Monomial(std::move(exps));
}

std::string Monomial::to_string() const {
  std::string out;
  for (int v = 1; v <= nvars(); ++v) {
    const int e = exponents_[static_cast<std::size_t>(v - 1)];
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(v);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

std::strong_ordering lex_compare(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars())
    fail("lex_compare across variable counts");
  return std::lexicographical_compare_three_way(
      a.exponents().begin(), a.exponents().end(), b.exponents().begin(),
      b.exponents().end());
}

std::strong_ordering reversed_lex_compare(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars())
    fail("reversed_lex_compare across variable counts");
  return std::lexicographical_compare_three_way(
      a.exponents().rbegin(), a.exponents().rend(), b.exponents().rbegin(),
      b.exponents().rend());
}

namespace {

bool lex_greater(const Monomial& a, const Monomial& b) {
  return lex_compare(a, b) == std::strong_ordering::greater;
}

}  // namespace

Polynomial Polynomial::zero(int nvars) {
  if (nvars < 1) fail("polynomial needs at least one variable");
  return Polynomial(nvars, {});
}

Polynomial Polynomial::constant(int nvars, const mpz_class& c) {
  if (c == 0) return zero(nvars);
  return Polynomial(nvars, {Term{Monomial(nvars), c}});
}

Polynomial Polynomial::variable(int nvars, int index) {
  if (index < 1 || index > nvars)
    fail("variable index " + std::to_string(index) + " out of range 1.." +
         std::to_string(nvars));
  std::vector<int> exps(static_cast<std::size_t>(nvars), 0);
  exps[static_cast<std::size_t>(index - 1)] = 1;
  return Polynomial(nvars, {Term{Monomial(std::move(exps)), 1}});
}

Polynomial Polynomial::from_monomial(const Monomial& m, const mpz_class& c) {
  if (c == 0) return zero(m.nvars());
  return Polynomial(m.nvars(), {Term{m, c}});
}

Polynomial Polynomial::from_terms(int nvars, std::vector<Term> terms) {
  std::map<std::vector<int>, mpz_class> acc;
  for (Term& t : terms) {
    if (t.monomial.nvars() != nvars)
      fail("term variable count does not match polynomial");
    acc[t.monomial.exponents()] += t.coefficient;
  }
  std::vector<Term> canonical;
  for (auto it = acc.rbegin(); it != acc.rend(); ++it)
    if (it->second != 0) canonical.push_back(Term{Monomial(it->first), it->second});
  // std::map orders exponent vectors ascending-lex; reversed gives descending.
  return Polynomial(nvars, std::move(canonical));
}

mpz_class Polynomial::coefficient(const Monomial& m) const {
  for (const Term& t : terms_)
    if (t.monomial == m) return t.coefficient;
  return 0;
}

Polynomial Polynomial::operator-() const {
  std::vector<Term> terms(terms_);
  for (Term& t : terms) t.coefficient = -t.coefficient;
  return Polynomial(nvars_, std::move(terms));
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  if (nvars_ != other.nvars_) fail("polynomial sum across variable counts");
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < other.terms_.size()) {
    if (terms_[i].monomial == other.terms_[j].monomial) {
      mpz_class c = terms_[i].coefficient + other.terms_[j].coefficient;
      if (c != 0) merged.push_back(Term{terms_[i].monomial, std::move(c)});
      ++i, ++j;
    } else if (lex_greater(terms_[i].monomial, other.terms_[j].monomial)) {
      merged.push_back(terms_[i++]);
    } else {
      merged.push_back(other.terms_[j++]);
    }
  }
  for (; i < terms_.size(); ++i) merged.push_back(terms_[i]);
  for (; j < other.terms_.size(); ++j) merged.push_back(other.terms_[j]);
  return Polynomial(nvars_, std::move(merged));
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  return *this + (-other);
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  if (nvars_ != other.nvars_) fail("polynomial product across variable counts");
  std::map<std::vector<int>, mpz_class> acc;
  for (const Term& a : terms_)
    for (const Term& b : other.terms_)
      acc[(a.monomial * b.monomial).exponents()] += a.coefficient * b.coefficient;
  std::vector<Term> terms;
  for (auto it = acc.rbegin(); it != acc.rend(); ++it)
    if (it->second != 0) terms.push_back(Term{Monomial(it->first), it->second});
  return Polynomial(nvars_, std::move(terms));
}

Polynomial Polynomial::operator*(const mpz_class& c) const {
  if (c == 0) return zero(nvars_);
  std::vector<Term> terms(terms_);
  for (Term& t : terms) t.coefficient *= c;
  return Polynomial(nvars_, std::move(terms));
}

Polynomial Polynomial::times(const Monomial& m) const {
  if (nvars_ != m.nvars()) fail("monomial factor across variable counts");
  std::vector<Term> terms(terms_);
  for (Term& t : terms) t.monomial = t.monomial * m;
  return Polynomial(nvars_, std::move(terms));  // shift preserves lex order
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = terms_.front().monomial.degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const Term& t) { return t.monomial.degree() == d; });
}

int Polynomial::degree() const {
  return terms_.empty() ? -1 : terms_.front().monomial.degree();
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const Term& t = terms_[i];
    const bool negative = t.coefficient < 0;
    mpz_class magnitude = negative ? mpz_class(-t.coefficient) : t.coefficient;
    if (i == 0) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (t.monomial.is_unit()) {
      out += magnitude.get_str();
    } else {
      if (magnitude != 1) out += magnitude.get_str() + "*";
      out += t.monomial.to_string();
    }
  }
  return out;
}

Polynomial diagonal_polynomial(const Diagonal& d, int n) {
  if (!valid_for(d, n))
    fail("diagonal " + d.to_string() + " is out of range for n=" + std::to_string(n));
  if (d.is_negative()) return Polynomial::constant(n + 1, 1);
  return Polynomial::variable(n + 1, d.low()) -
         Polynomial::variable(n + 1, d.high() + 1);
}

Polynomial basis_polynomial(const Triangulation& t) {
  const int n = t.size();
  Polynomial product = Polynomial::constant(n + 1, 1);
  for (const Diagonal& d : t.diagonals())
    if (d.is_positive()) product = product * diagonal_polynomial(d, n);
  return product;
}

Monomial dyck_monomial(const DyckPath& d) {
  std::vector<int> exps(static_cast<std::size_t>(d.size()) + 1, 0);
  int downs = 0;
  for (const char c : d.steps()) {
    if (c == 'D') ++downs;
    else if (downs >= 1) ++exps[static_cast<std::size_t>(downs - 1)];
  }
  return Monomial(std::move(exps));
}

const Monomial& leading_monomial(const Polynomial& p) {
  if (p.is_zero()) fail("leading monomial of the zero polynomial");
  return p.terms().front().monomial;
}

const Monomial& reversed_leading_monomial(const Polynomial& p) {
  if (p.is_zero()) fail("leading monomial of the zero polynomial");
  const Term* best = &p.terms().front();
  for (const Term& t : p.terms())
    if (reversed_lex_compare(t.monomial, best->monomial) ==
        std::strong_ordering::greater)
      best = &t;
  return best->monomial;
}

Polynomial reverse_variables(const Polynomial& p) {
  std::vector<Term> terms;
  terms.reserve(p.terms().size());
  for (const Term& t : p.terms())
    terms.push_back(Term{t.monomial.reversed(), t.coefficient});
  return Polynomial::from_terms(p.nvars(), std::move(terms));
}

bool verify_leading_monomials(int n) {
  for (const Triangulation& t : enumerate_triangulations(n))
    if (leading_monomial(basis_polynomial(t)) !=
        dyck_monomial(triangulation_to_dyck(t)))
      return false;
  return true;
}

std::vector<Polynomial> piece_factorization(const Triangulation& t) {
  const int n = t.size();
  const int nvars = n + 1;
  const PieceDecomposition dec = split_at_star(t);

  std::vector<Polynomial> factors;
  Polynomial left = Polynomial::constant(nvars, 1);
  for (const Diagonal& d : dec.left.diagonals())
    if (d.is_positive())
      left = left * (Polynomial::variable(nvars, d.low()) -
                     Polynomial::variable(nvars, d.high() + 1));
  factors.push_back(std::move(left));

  for (const IndexedPiece& piece : dec.pieces) {
    const int c = piece.offset;
    // The cut chord contributes x_{c+1} - x_{n+1}; piece fan diagonals come
    // from chords through v_c and contribute x_{c+1} - x_{c+k+1}.
    Polynomial factor = Polynomial::variable(nvars, c + 1) -
                        Polynomial::variable(nvars, n + 1);
    for (const Diagonal& d : piece.piece.diagonals()) {
      if (d.is_negative())
        factor = factor * (Polynomial::variable(nvars, c + 1) -
                           Polynomial::variable(nvars, c + d.fan_index() + 1));
      else
        factor = factor * (Polynomial::variable(nvars, c + d.low() + 1) -
                           Polynomial::variable(nvars, c + d.high() + 2));
    }
    factors.push_back(std::move(factor));
  }
  return factors;
}

namespace {

void collect_monomials(int remaining_vars, int degree, std::vector<int>& prefix,
                       std::vector<Monomial>& out) {
  if (remaining_vars == 1) {
    prefix.push_back(degree);
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int e = degree; e >= 0; --e) {
    prefix.push_back(e);
    collect_monomials(remaining_vars - 1, degree - e, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int nvars, int degree) {
  if (nvars < 1) fail("monomials_of_degree needs at least one variable");
  if (degree < 0) fail("monomials_of_degree needs degree >= 0");
  std::vector<Monomial> out;
  std::vector<int> prefix;
  collect_monomials(nvars, degree, prefix, out);
  return out;
}

}  // namespace qsc
