#pragma once

// Text front-end for polynomials:
//   expression := ['-'] term (('+'|'-') term)*
//   term       := factor ('*' factor)*
//   factor     := base ('^' nonneg-integer)?
//   base       := variable | integer ('/' positive-integer)? | '(' expression ')'

#include "jaclab/algebra/bipoly.hpp"

#include <string>
#include <utility>

namespace jaclab {

using VariableNames = std::pair<std::string, std::string>;

/// Throws ParseError (with byte position) on syntax errors, unknown variables and
/// non-rational literals.
BiPoly parse_polynomial(const std::string& text, const VariableNames& vars = {"x", "y"});
/// Single-variable form of the same grammar.
UPoly parse_univariate(const std::string& text, const std::string& var = "t");

inline std::string render(const BiPoly& p, const VariableNames& vars = {"x", "y"}) {
  return p.render(vars.first, vars.second);
}

}  // namespace jaclab
