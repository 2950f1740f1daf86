#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "qsc/bijection.hpp"
#include "qsc/serialization.hpp"

using namespace qsc;

TEST_CASE("triangulation json golden") {
  const Triangulation t(5, {Diagonal::positive(1, 1), Diagonal::negative(2),
                            Diagonal::positive(3, 3), Diagonal::positive(3, 5),
                            Diagonal::positive(5, 5)});
  CHECK(to_json(t) ==
        R"({"n":5,"diagonals":[["N",2],["P",1,1],["P",3,3],["P",3,5],["P",5,5]]})");
  CHECK(to_json(Triangulation(0, {})) == R"({"n":0,"diagonals":[]})");
}

TEST_CASE("triangulation json roundtrip over all small objects") {
  for (int n = 0; n <= 4; ++n)
    for (const Triangulation& t : enumerate_triangulations(n)) {
      CHECK(triangulation_from_json(to_json(t)) == t);
      CHECK(triangulation_from_json(to_json(t), n) == t);
    }
}

TEST_CASE("triangulation parsing accepts the bare array form") {
  const Triangulation t =
      triangulation_from_json(R"([["N",1],["P",2,2]])", 2);
  CHECK(t == Triangulation(2, {Diagonal::negative(1), Diagonal::positive(2, 2)}));
}

TEST_CASE("triangulation parsing diagnostics") {
  CHECK_THROWS_WITH_AS(triangulation_from_json("nonsense"),
                       doctest::Contains("not valid JSON"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(triangulation_from_json(R"([["N",1]])"),
                       doctest::Contains("needs the polygon size"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(triangulation_from_json(R"([["Q",1]])", 1),
                       doctest::Contains("unknown diagonal kind"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(triangulation_from_json(R"([["P",1,1],["P",2,2]])", 2),
                       doctest::Contains("cross"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(triangulation_from_json(R"({"n":1,"diagonals":[["N",1]]})", 2),
                       doctest::Contains("requested"), std::invalid_argument);
}

TEST_CASE("dyck path and monomial json") {
  CHECK(to_json(DyckPath("UUDD")) == R"("UUDD")");
  CHECK(to_json(dyck_monomial(DyckPath("UUDUDDUUDDUD"))) == "[1,0,2,0,1,0]");
}

TEST_CASE("polynomial json golden") {
  const Polynomial p = Polynomial::variable(2, 1) - Polynomial::variable(2, 2);
  CHECK(to_json(p) == "[[1,[1,0]],[-1,[0,1]]]");
  CHECK(to_json(Polynomial::zero(2)) == "[]");
}

TEST_CASE("polynomial json falls back to strings for huge coefficients") {
  const mpz_class huge("123456789012345678901234567890");
  CHECK(to_json(Polynomial::constant(1, huge)) ==
        R"([["123456789012345678901234567890",[0]]])");
  CHECK(to_json(Polynomial::constant(1, -7)) == "[[-7,[0]]]");
}

TEST_CASE("report serialization") {
  const GradedBasisReport report = verify_basis(1);
  const std::string json = to_json(report);
  CHECK(json.find("\"n\":1") != std::string::npos);
  CHECK(json.find("\"total_quotient_dim\":2") != std::string::npos);
  CHECK(json.find("\"independent\":true") != std::string::npos);

  const std::string table = to_text_table(report);
  CHECK(table.find("degree  dim R  dim I  dim Q  family  status") != std::string::npos);
  CHECK(table.find("OK") != std::string::npos);
  CHECK(table.find("total quotient dimension = 2 (catalan(2) = 2)") !=
        std::string::npos);
}
