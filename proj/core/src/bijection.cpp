#include "qsc/bijection.hpp"

#include <stdexcept>
#include <string>

namespace qsc {

std::vector<Diagonal> diagonals_at_star(const Triangulation& t) {
  std::vector<Diagonal> out;
  for (const Diagonal& d : t.diagonals())
    if (d.is_positive() && d.high() == t.size()) out.push_back(d);
  return out;  // canonical order of t.diagonals() is already sorted by i
}

std::vector<int> ext_set(const Triangulation& t) {
  std::vector<int> out;
  for (const Diagonal& d : diagonals_at_star(t)) out.push_back(d.low() - 1);
  return out;
}

PieceDecomposition split_at_star(const Triangulation& t) {
  const auto cuts = diagonals_at_star(t);
  if (cuts.empty())
    throw std::invalid_argument(
        "split_at_star: the star vertex of " + t.to_string() +
        " has no incident diagonal");
  const int n = t.size();
  const auto offsets = ext_set(t);
  const int m = static_cast<int>(offsets.size());

  std::vector<Diagonal> left_diagonals;
  std::vector<std::vector<Diagonal>> piece_diagonals(m);

  for (const Diagonal& d : t.diagonals()) {
    if (d.is_negative()) {
      // Negatives never cross a cut, so k <= c_1.
      left_diagonals.push_back(d);
      continue;
    }
    const int i = d.low(), j = d.high();
    if (j == n) continue;  // a cut
    if (j < offsets.front()) {
      left_diagonals.push_back(d);
      continue;
    }
    bool placed = false;
    for (int p = 0; p < m; ++p) {
      const int c = offsets[p];
      const int next = p + 1 < m ? offsets[p + 1] : n;
      if (i - 1 >= c && j + 1 <= next) {
        // Diagonals through v_c become fan diagonals of the piece.
        if (i == c + 1)
          piece_diagonals[p].push_back(Diagonal::negative(j - c));
        else
          piece_diagonals[p].push_back(Diagonal::positive(i - c - 1, j - c - 1));
        placed = true;
        break;
      }
    }
    if (!placed)
      throw std::logic_error("split_at_star: diagonal " + d.to_string() +
                             " fits no piece of " + t.to_string());
  }

  PieceDecomposition result{
      Triangulation(offsets.front(), std::move(left_diagonals)), {}, cuts};
  for (int p = 0; p < m; ++p) {
    const int c = offsets[p];
    const int next = p + 1 < m ? offsets[p + 1] : n;
    result.pieces.push_back(
        IndexedPiece{c, Triangulation(next - c - 1, std::move(piece_diagonals[p]))});
  }
  return result;
}

namespace {

std::string dyck_string(const Triangulation& t) {
  if (t.size() == 0) return "UD";
  if (diagonals_at_star(t).empty()) {
    // The star vertex sits in the single triangle cut off by Negative(n);
    // drop that triangle and frame the smaller path with an Up and a Down.
    const int n = t.size();
    if (!t.contains(Diagonal::negative(n)))
      throw std::logic_error("triangulation without star diagonals must contain N" +
                             std::to_string(n) + ": " + t.to_string());
    std::vector<Diagonal> rest;
    for (const Diagonal& d : t.diagonals())
      if (d.is_negative() ? d.fan_index() != n : true) rest.push_back(d);
    return "U" + dyck_string(Triangulation(n - 1, std::move(rest))) + "D";
  }
  const PieceDecomposition dec = split_at_star(t);
  std::string out = dyck_string(dec.left);
  for (const IndexedPiece& piece : dec.pieces) out += dyck_string(piece.piece);
  return out;
}

}  // namespace

DyckPath triangulation_to_dyck(const Triangulation& t) {
  return DyckPath(dyck_string(t));
}

Triangulation dyck_to_triangulation(const DyckPath& d) {
  const int n = d.size();
  if (n == 0) return Triangulation(0, {});
  const auto components = decompose_irreducible(d);
  if (components.size() == 1) {
    const std::string& s = d.steps();
    const Triangulation inner =
        dyck_to_triangulation(DyckPath(s.substr(1, s.size() - 2)));
    auto diagonals = inner.diagonals();
    diagonals.push_back(Diagonal::negative(n));
    return Triangulation(n, std::move(diagonals));
  }
  // Re-assemble the pieces: component sizes fix the cut offsets.
  std::vector<Diagonal> diagonals = dyck_to_triangulation(components[0]).diagonals();
  int offset = components[0].size();
  for (std::size_t p = 1; p < components.size(); ++p) {
    diagonals.push_back(Diagonal::positive(offset + 1, n));
    const Triangulation piece = dyck_to_triangulation(components[p]);
    for (const Diagonal& pd : piece.diagonals()) {
      if (pd.is_negative())
        diagonals.push_back(Diagonal::positive(offset + 1, offset + pd.fan_index()));
      else
        diagonals.push_back(
            Diagonal::positive(pd.low() + offset + 1, pd.high() + offset + 1));
    }
    offset += components[p].size() + 1;
  }
  return Triangulation(n, std::move(diagonals));
}

bool check_initial_ascent_lemma(int n) {
  for (const Triangulation& t : enumerate_triangulations(n))
    if (initial_ascent(triangulation_to_dyck(t)) != t.negative_count() + 1)
      return false;
  return true;
}

}  // namespace qsc
