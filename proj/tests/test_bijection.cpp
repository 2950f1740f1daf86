#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <stdexcept>

#include "qsc/bijection.hpp"

using namespace qsc;

namespace {

// The size-5 example used across the suites:
// its image is UUDUDDUUDDUD and its basis polynomial has leading monomial x1*x3^2*x5.
Triangulation worked_triangulation() {
  return Triangulation(5, {Diagonal::positive(1, 1), Diagonal::negative(2),
                           Diagonal::positive(3, 3), Diagonal::positive(3, 5),
                           Diagonal::positive(5, 5)});
}

}  // namespace

TEST_CASE("diagonals_at_star") {
  CHECK(diagonals_at_star(fan_triangulation(4)).empty());

  const Triangulation pentagon(2, {Diagonal::negative(1), Diagonal::positive(2, 2)});
  CHECK(diagonals_at_star(pentagon) ==
        std::vector<Diagonal>{Diagonal::positive(2, 2)});

  CHECK(diagonals_at_star(worked_triangulation()) ==
        std::vector<Diagonal>{Diagonal::positive(3, 5), Diagonal::positive(5, 5)});
}

TEST_CASE("ext_set") {
  CHECK(ext_set(fan_triangulation(3)).empty());
  CHECK(ext_set(worked_triangulation()) == std::vector<int>{2, 4});
  CHECK(ext_set(Triangulation(1, {Diagonal::positive(1, 1)})) ==
        std::vector<int>{0});
}

TEST_CASE("split_at_star rejects triangulations without star diagonals") {
  CHECK_THROWS_AS(split_at_star(fan_triangulation(2)), std::invalid_argument);
  CHECK_THROWS_AS(split_at_star(Triangulation(0, {})), std::invalid_argument);
}

TEST_CASE("split_at_star pentagon example") {
  const Triangulation pentagon(2, {Diagonal::negative(1), Diagonal::positive(2, 2)});
  const PieceDecomposition dec = split_at_star(pentagon);
  CHECK(dec.cuts == std::vector<Diagonal>{Diagonal::positive(2, 2)});
  CHECK(dec.left == fan_triangulation(1));  // square with N1
  REQUIRE(dec.pieces.size() == 1);
  CHECK(dec.pieces[0].offset == 1);
  CHECK(dec.pieces[0].piece == Triangulation(0, {}));
}

TEST_CASE("split_at_star smallest cut") {
  const Triangulation square(1, {Diagonal::positive(1, 1)});
  const PieceDecomposition dec = split_at_star(square);
  CHECK(dec.left == Triangulation(0, {}));
  REQUIRE(dec.pieces.size() == 1);
  CHECK(dec.pieces[0].offset == 0);
  CHECK(dec.pieces[0].piece == Triangulation(0, {}));
}

TEST_CASE("split_at_star on the worked triangulation") {
  const PieceDecomposition dec = split_at_star(worked_triangulation());
  CHECK(dec.cuts == std::vector<Diagonal>{Diagonal::positive(3, 5),
                                          Diagonal::positive(5, 5)});
  CHECK(dec.left ==
        Triangulation(2, {Diagonal::negative(2), Diagonal::positive(1, 1)}));
  REQUIRE(dec.pieces.size() == 2);
  CHECK(dec.pieces[0].offset == 2);
  CHECK(dec.pieces[0].piece == fan_triangulation(1));
  CHECK(dec.pieces[1].offset == 4);
  CHECK(dec.pieces[1].piece == Triangulation(0, {}));
  // triangle counts 3 + 2 + 1 = 6 = n + 1
  CHECK(dec.left.size() + 1 + dec.pieces[0].piece.size() + 1 +
            dec.pieces[1].piece.size() + 1 ==
        worked_triangulation().size() + 1);
}

TEST_CASE("split pieces never contain their own star diagonals") {
  for (int n = 1; n <= 6; ++n) {
    for (const Triangulation& t : enumerate_triangulations(n)) {
      if (diagonals_at_star(t).empty()) continue;
      const PieceDecomposition dec = split_at_star(t);
      CHECK(diagonals_at_star(dec.left).empty());
      int diagonal_count = static_cast<int>(dec.cuts.size()) + dec.left.size();
      for (const IndexedPiece& piece : dec.pieces) {
        CHECK(diagonals_at_star(piece.piece).empty());
        diagonal_count += piece.piece.size();
      }
      CHECK(diagonal_count == n);
    }
  }
}

TEST_CASE("triangulation_to_dyck base and small cases") {
  CHECK(triangulation_to_dyck(Triangulation(0, {})).steps() == "UD");
  CHECK(triangulation_to_dyck(fan_triangulation(1)).steps() == "UUDD");
  CHECK(triangulation_to_dyck(Triangulation(1, {Diagonal::positive(1, 1)})).steps() ==
        "UDUD");
  CHECK(triangulation_to_dyck(
            Triangulation(2, {Diagonal::negative(1), Diagonal::positive(2, 2)}))
            .steps() == "UUDDUD");
}

TEST_CASE("worked triangulation maps to its path") {
  CHECK(triangulation_to_dyck(worked_triangulation()).steps() == "UUDUDDUUDDUD");
}

TEST_CASE("dyck_to_triangulation base and small cases") {
  CHECK(dyck_to_triangulation(DyckPath("UD")) == Triangulation(0, {}));
  CHECK(dyck_to_triangulation(DyckPath("UUDD")) == fan_triangulation(1));
  CHECK(dyck_to_triangulation(DyckPath("UUDUDDUUDDUD")) == worked_triangulation());
}

TEST_CASE("the map is a bijection with inverse dyck_to_triangulation") {
  for (int n = 0; n <= 6; ++n) {
    const auto triangulations = enumerate_triangulations(n);
    const auto paths = enumerate_dyck_paths(n);
    std::set<DyckPath> images;
    for (const Triangulation& t : triangulations) {
      const DyckPath d = triangulation_to_dyck(t);
      images.insert(d);
      CHECK(dyck_to_triangulation(d) == t);
    }
    CHECK(images.size() == triangulations.size());  // injective
    std::set<DyckPath> all(paths.begin(), paths.end());
    CHECK(images == all);  // surjective onto Dyck paths
    for (const DyckPath& d : paths)
      CHECK(triangulation_to_dyck(dyck_to_triangulation(d)) == d);
  }
}

TEST_CASE("initial ascent lemma") {
  CHECK(initial_ascent(triangulation_to_dyck(fan_triangulation(1))) == 2);
  CHECK(initial_ascent(triangulation_to_dyck(Triangulation(0, {}))) == 1);
  for (int n = 0; n <= 6; ++n) CHECK(check_initial_ascent_lemma(n));
}

TEST_CASE("piece path lengths add up to the whole path") {
  for (int n = 1; n <= 6; ++n) {
    for (const Triangulation& t : enumerate_triangulations(n)) {
      if (diagonals_at_star(t).empty()) continue;
      const PieceDecomposition dec = split_at_star(t);
      int total = triangulation_to_dyck(dec.left).length();
      for (const IndexedPiece& piece : dec.pieces)
        total += triangulation_to_dyck(piece.piece).length();
      CHECK(total == 2 * n + 2);
      // and the pieces are exactly the irreducible components
      CHECK(decompose_irreducible(triangulation_to_dyck(t)).size() ==
            dec.pieces.size() + 1);
    }
  }
}
