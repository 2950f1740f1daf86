#pragma once

#include <vector>

#include "qsc/combinatorics.hpp"

namespace qsc {

// One piece of the decomposition of a triangulation along the diagonals at B.
// `offset` is the cut index c: the piece sits between the cut chords v_c--B
// and v_{c'}--B and is re-labeled to its own standalone polygon with
// distinguished vertex v_c.
struct IndexedPiece {
  int offset;
  Triangulation piece;
};

struct PieceDecomposition {
  Triangulation left;                // sub-polygon H, v_0, ..., v_{c_1}, B
  std::vector<IndexedPiece> pieces;  // left-to-right, increasing offset
  std::vector<Diagonal> cuts;        // the Positive(c+1, n) of T, increasing c
};

// The Positive(i, n) diagonals of T (those reaching B), sorted by i.
// Empty exactly when B belongs to a single triangle.
std::vector<Diagonal> diagonals_at_star(const Triangulation& t);

// Cut indices { i-1 : Positive(i,n) in T }, increasing.  Includes 0 when the
// chord v_0--B is present.
std::vector<int> ext_set(const Triangulation& t);

// Cuts T along all diagonals at B and re-labels each piece to a standalone
// triangulation.  Throws std::invalid_argument when there is nothing to cut.
//
// Re-labeling of the left piece keeps indices: Negative(k) -> Negative(k),
// Positive(i,j) -> Positive(i,j).  The piece at offset c maps each original
// diagonal Positive(c+1, j) (those containing v_c) to Negative(j-c) and every
// other Positive(i,j) to Positive(i-c-1, j-c-1).
PieceDecomposition split_at_star(const Triangulation& t);

// The recursive bijection T -> D(T).  A triangulation whose B-vertex sits in a
// single triangle maps to Up . D(T without that triangle) . Down; otherwise
// the images of the pieces of split_at_star are concatenated left to right.
DyckPath triangulation_to_dyck(const Triangulation& t);

// Exact inverse of triangulation_to_dyck, by irreducible components.
Triangulation dyck_to_triangulation(const DyckPath& d);

// Checks initial_ascent(D(T)) == #negatives(T) + 1 over all T of size n.
bool check_initial_ascent_lemma(int n);

}  // namespace qsc
