#pragma once

// Non-proper value set of a map f = (P, Q): C^2 -> C^2, from dicritical series and from
// an independent elimination oracle.

#include "jaclab/puiseux/newton.hpp"

#include <string>
#include <vector>

namespace jaclab {

struct DicriticalComponent {
  FractionalSeries series;  // in the normalized source coordinates
  UPoly p_lead, q_lead;     // x^0 coefficients of P(x, phi) and Q(x, phi)
  int a_exp = 0, b_exp = 0; // leading x-exponents of P(x, phi), Q(x, phi), in units of 1/m
  BiPoly implicit;          // squarefree, rational, in (u, v)
  std::string source;       // "P" or "Q": whose Newton-Puiseux type produced the series
  int type_index = 0;
};

struct NonProperSet {
  std::vector<DicriticalComponent> components;  // one per distinct implicit equation
  BiPoly oracle_polynomial;                     // 1 when the map is proper
  bool agree = true;
  LinearChange normalization;
};

/// Throws DegenerateInput("degenerate map") when J(P, Q) vanishes identically.
void require_dominant(const BiPoly& P, const BiPoly& Q);

std::vector<DicriticalComponent> dicritical_series(const BiPoly& P, const BiPoly& Q,
                                                   int tower_depth = kDefaultTowerDepth);

/// Squarefree integer-normalized generator of the relation between p(s) and q(s); for
/// coefficients in a number field, the norm down to Q.
BiPoly implicitize(const UPoly& p, const UPoly& q);

/// Squarefree leading x-coefficient of Res_y(P - u, Q - v), intersected with the same
/// quantity in a second sheared coordinate system.
BiPoly nonproper_oracle(const BiPoly& P, const BiPoly& Q);

/// Components plus oracle. Throws CorrectnessAlarm when their zero sets differ.
NonProperSet nonproper_set(const BiPoly& P, const BiPoly& Q, int tower_depth = kDefaultTowerDepth);

/// Whether two squarefree polynomials have the same zero set.
bool same_zero_set(const BiPoly& a, const BiPoly& b);

}  // namespace jaclab
