#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace qsc {

// Diagonals of a convex (n+3)-gon with a distinguished vertex H and its
// counterclockwise neighbor B (the recursion anchor, drawn to the right of H).
// The remaining vertices are v_0, ..., v_n from left to right; v_{n+1} means B.
//
// Negative(k) is the fan diagonal H--v_k.  Positive(i,j), 1 <= i <= j <= n, is
// the chord v_{i-1}--v_{j+1}; it crosses exactly the fan diagonals i..j.
// Canonical encoding: Negative(k) as (0,k), Positive(i,j) as (i,j).
class Diagonal {
 public:
  static Diagonal negative(int k);
  static Diagonal positive(int i, int j);

  bool is_negative() const { return first_ == 0; }
  bool is_positive() const { return first_ != 0; }

  // Fan index k of Negative(k).
  int fan_index() const;
  // Segment endpoints of Positive(i,j).
  int low() const;
  int high() const;

  std::pair<int, int> encoding() const { return {first_, second_}; }

  friend auto operator<=>(const Diagonal&, const Diagonal&) = default;

  std::string to_string() const;  // "N2", "P(3,5)"

 private:
  Diagonal(int a, int b) : first_(a), second_(b) {}
  int first_;
  int second_;
};

// True iff the two chords intersect in the interior of the polygon.
bool crossing(const Diagonal& a, const Diagonal& b);

// True iff d names a diagonal of the (n+3)-gon.
bool valid_for(const Diagonal& d, int n);

// A maximal set of pairwise non-crossing diagonals: exactly n of them.
// Diagonals are kept sorted in the canonical encoding order, so value
// comparison is structural and enumeration output is reproducible.
class Triangulation {
 public:
  Triangulation(int n, std::vector<Diagonal> diagonals);

  int size() const { return n_; }  // polygon has n+3 vertices
  const std::vector<Diagonal>& diagonals() const { return diagonals_; }

  bool contains(const Diagonal& d) const;
  int positive_count() const;
  int negative_count() const;

  friend auto operator<=>(const Triangulation&, const Triangulation&) = default;

  std::string to_string() const;  // "{N2, P(3,5)}"

 private:
  int n_;
  std::vector<Diagonal> diagonals_;
};

// Balanced Up/Down sequence of length 2n+2 staying weakly above the axis.
class DyckPath {
 public:
  explicit DyckPath(std::string_view steps);

  int size() const { return static_cast<int>(steps_.size()) / 2 - 1; }  // n
  int length() const { return static_cast<int>(steps_.size()); }        // 2n+2
  const std::string& steps() const { return steps_; }

  friend auto operator<=>(const DyckPath&, const DyckPath&) = default;

 private:
  std::string steps_;
};

// c_m = C(2m, m) / (m+1), exactly.  Requires m >= 1.
mpz_class catalan(int m);

// All triangulations of the (n+3)-gon, sorted lexicographically on their
// sorted diagonal encodings.
std::vector<Triangulation> enumerate_triangulations(int n);

// All Dyck paths of length 2n+2, in ascending lexicographic order ('D' < 'U').
std::vector<DyckPath> enumerate_dyck_paths(int n);

// The fan {Negative(1), ..., Negative(n)}.
Triangulation fan_triangulation(int n);

// Mirror image: Negative(k) -> Negative(n+1-k), Positive(i,j) -> Positive(n+1-j, n+1-i).
Triangulation reflect(const Triangulation& t);

// Length of the maximal prefix of Up steps.
int initial_ascent(const DyckPath& d);

// Splits d at each return to height zero; components concatenate back to d.
std::vector<DyckPath> decompose_irreducible(const DyckPath& d);

}  // namespace qsc
