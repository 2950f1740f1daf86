#pragma once

#include <optional>
#include <string>

#include "qsc/combinatorics.hpp"
#include "qsc/polynomial.hpp"
#include "qsc/qsym.hpp"

// JSON encodings shared with the CLI:
//   Triangulation  {"n": n, "diagonals": [["N",k] | ["P",i,j], ...]}  (canonical order)
//   DyckPath       "UUDD..." (a JSON string)
//   Polynomial     [[coefficient, [e_1, ..., e_nvars]], ...]  (lex-descending)
//   Report         {"n":..., "per_degree":[...], "total_quotient_dim":..., "total_is_catalan":...}

namespace qsc {

std::string to_json(const Diagonal& d);
std::string to_json(const Triangulation& t);
std::string to_json(const DyckPath& d);
std::string to_json(const Monomial& m);
std::string to_json(const Polynomial& p);
std::string to_json(const GradedBasisReport& report);

// Accepts either the full object form or a bare diagonals array (the size n
// must then be supplied).  Throws std::invalid_argument naming the problem.
Triangulation triangulation_from_json(const std::string& text,
                                      std::optional<int> n = std::nullopt);

// Fixed-width table with one row per degree and the Catalan total.
std::string to_text_table(const GradedBasisReport& report);

}  // namespace qsc
