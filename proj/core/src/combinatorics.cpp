#include "qsc/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>

namespace qsc {

namespace {

[[noreturn]] void fail(const std::string& message) {
  throw std::invalid_argument(message);
}

}  // namespace

Diagonal Diagonal::negative(int k) {
  if (k < 1) fail("negative diagonal index must satisfy k >= 1, got k=" + std::to_string(k));
  return Diagonal(0, k);
}

Diagonal Diagonal::positive(int i, int j) {
  if (i < 1 || j < i)
    fail("positive diagonal needs 1 <= i <= j, got i=" + std::to_string(i) +
         ", j=" + std::to_string(j));
  return Diagonal(i, j);
}

int Diagonal::fan_index() const {
  if (!is_negative()) fail("fan_index on a positive diagonal " + to_string());
  return second_;
}

int Diagonal::low() const {
  if (!is_positive()) fail("low on a negative diagonal " + to_string());
  return first_;
}

int Diagonal::high() const {
  if (!is_positive()) fail("high on a negative diagonal " + to_string());
  return second_;
}

std::string Diagonal::to_string() const {
  if (is_negative()) return "N" + std::to_string(second_);
  return "P(" + std::to_string(first_) + "," + std::to_string(second_) + ")";
}

bool crossing(const Diagonal& a, const Diagonal& b) {
  if (a.is_negative() && b.is_negative()) return false;  // both contain H
  if (a.is_negative()) return crossing(b, a);
  if (b.is_negative()) {
    const int k = b.fan_index();
    return a.low() <= k && k <= a.high();
  }
  // Two positive diagonals cross iff their endpoint pairs strictly interleave
  // on the boundary: [i,j] vs [i',j'] with i < i' <= j+1 and j < j'.
  const int i1 = a.low(), j1 = a.high(), i2 = b.low(), j2 = b.high();
  return (i1 < i2 && i2 <= j1 + 1 && j1 < j2) ||
         (i2 < i1 && i1 <= j2 + 1 && j2 < j1);
}

bool valid_for(const Diagonal& d, int n) {
  if (d.is_negative()) return d.fan_index() <= n;
  return d.high() <= n;
}

Triangulation::Triangulation(int n, std::vector<Diagonal> diagonals)
    : n_(n), diagonals_(std::move(diagonals)) {
  if (n < 0) fail("triangulation size must be non-negative, got n=" + std::to_string(n));
  if (static_cast<int>(diagonals_.size()) != n)
    fail("triangulation of size " + std::to_string(n) + " must have exactly " +
         std::to_string(n) + " diagonals, got " + std::to_string(diagonals_.size()));
  std::sort(diagonals_.begin(), diagonals_.end());
  for (std::size_t a = 0; a < diagonals_.size(); ++a) {
    if (!valid_for(diagonals_[a], n))
      fail("diagonal " + diagonals_[a].to_string() + " is out of range for n=" +
           std::to_string(n));
    if (a > 0 && diagonals_[a] == diagonals_[a - 1])
      fail("duplicate diagonal " + diagonals_[a].to_string());
    for (std::size_t b = a + 1; b < diagonals_.size(); ++b)
      if (crossing(diagonals_[a], diagonals_[b]))
        fail("diagonals cross: " + diagonals_[a].to_string() + " and " +
             diagonals_[b].to_string());
  }
}

bool Triangulation::contains(const Diagonal& d) const {
  return std::binary_search(diagonals_.begin(), diagonals_.end(), d);
}

int Triangulation::positive_count() const {
  return static_cast<int>(
      std::count_if(diagonals_.begin(), diagonals_.end(),
                    [](const Diagonal& d) { return d.is_positive(); }));
}

int Triangulation::negative_count() const { return n_ - positive_count(); }

std::string Triangulation::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < diagonals_.size(); ++i) {
    if (i > 0) out += ", ";
    out += diagonals_[i].to_string();
  }
  return out + "}";
}

DyckPath::DyckPath(std::string_view steps) : steps_(steps) {
  if (steps_.empty() || steps_.size() % 2 != 0)
    fail("dyck path must have positive even length, got length " +
         std::to_string(steps_.size()));
  int height = 0;
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    const char c = steps_[i];
    if (c == 'U') {
      ++height;
    } else if (c == 'D') {
      --height;
    } else {
      fail(std::string("dyck path steps must be 'U' or 'D', got '") + c + "'");
    }
    if (height < 0)
      fail("dyck path dips below the axis at step " + std::to_string(i + 1));
  }
  if (height != 0) fail("unbalanced dyck path: ends at height " + std::to_string(height));
}

mpz_class catalan(int m) {
  if (m < 1) fail("catalan requires m >= 1, got m=" + std::to_string(m));
  mpz_class result;
  mpz_bin_uiui(result.get_mpz_t(), 2ul * m, static_cast<unsigned long>(m));
  mpz_divexact_ui(result.get_mpz_t(), result.get_mpz_t(),
                  static_cast<unsigned long>(m) + 1);
  return result;
}

namespace {

// Boundary positions, counterclockwise: H = 0, B = 1, v_k = n+2-k.  So the
// chord (0, p) is Negative(n+2-p) and a chord (a, b) with 0 < a < b is
// Positive(n+3-b, n+1-a).
Diagonal chord_to_diagonal(int n, int a, int b) {
  if (a == 0) return Diagonal::negative(n + 2 - b);
  return Diagonal::positive(n + 3 - b, n + 1 - a);
}

// All triangulations of the convex sub-polygon on positions a, a+1, ..., b,
// closed by the edge (a, b), as lists of chords.
std::vector<std::vector<std::pair<int, int>>> triangulate_chain(int a, int b) {
  if (b - a < 2) return {{}};
  std::vector<std::vector<std::pair<int, int>>> out;
  for (int k = a + 1; k < b; ++k) {
    const auto lefts = triangulate_chain(a, k);
    const auto rights = triangulate_chain(k, b);
    for (const auto& left : lefts) {
      for (const auto& right : rights) {
        auto chords = left;
        chords.insert(chords.end(), right.begin(), right.end());
        if (k - a >= 2) chords.emplace_back(a, k);
        if (b - k >= 2) chords.emplace_back(k, b);
        out.push_back(std::move(chords));
      }
    }
  }
  return out;
}

}  // namespace

std::vector<Triangulation> enumerate_triangulations(int n) {
  if (n < 0) fail("enumerate_triangulations requires n >= 0");
  std::vector<Triangulation> out;
  for (const auto& chords : triangulate_chain(0, n + 2)) {
    std::vector<Diagonal> diagonals;
    diagonals.reserve(chords.size());
    for (const auto& [a, b] : chords) diagonals.push_back(chord_to_diagonal(n, a, b));
    out.emplace_back(n, std::move(diagonals));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void grow_paths(std::string& steps, int ups, int downs, int half,
                std::vector<DyckPath>& out) {
  if (static_cast<int>(steps.size()) == 2 * half) {
    out.emplace_back(steps);
    return;
  }
  if (downs < ups) {  // 'D' < 'U', so descend first for ascending output
    steps.push_back('D');
    grow_paths(steps, ups, downs + 1, half, out);
    steps.pop_back();
  }
  if (ups < half) {
    steps.push_back('U');
    grow_paths(steps, ups + 1, downs, half, out);
    steps.pop_back();
  }
}

}  // namespace

std::vector<DyckPath> enumerate_dyck_paths(int n) {
  if (n < 0) fail("enumerate_dyck_paths requires n >= 0");
  std::vector<DyckPath> out;
  std::string steps;
  grow_paths(steps, 0, 0, n + 1, out);
  return out;
}

Triangulation fan_triangulation(int n) {
  std::vector<Diagonal> diagonals;
  for (int k = 1; k <= n; ++k) diagonals.push_back(Diagonal::negative(k));
  return Triangulation(n, std::move(diagonals));
}

Triangulation reflect(const Triangulation& t) {
  const int n = t.size();
  std::vector<Diagonal> diagonals;
  diagonals.reserve(t.diagonals().size());
  for (const Diagonal& d : t.diagonals()) {
    if (d.is_negative())
      diagonals.push_back(Diagonal::negative(n + 1 - d.fan_index()));
    else
      diagonals.push_back(Diagonal::positive(n + 1 - d.high(), n + 1 - d.low()));
  }
  return Triangulation(n, std::move(diagonals));
}

int initial_ascent(const DyckPath& d) {
  int count = 0;
  for (const char c : d.steps()) {
    if (c != 'U') break;
    ++count;
  }
  return count;
}

std::vector<DyckPath> decompose_irreducible(const DyckPath& d) {
  std::vector<DyckPath> components;
  int height = 0;
  std::size_t start = 0;
  const std::string& s = d.steps();
  for (std::size_t i = 0; i < s.size(); ++i) {
    height += s[i] == 'U' ? 1 : -1;
    if (height == 0) {
      components.emplace_back(s.substr(start, i + 1 - start));
      start = i + 1;
    }
  }
  return components;
}

}  // namespace qsc
