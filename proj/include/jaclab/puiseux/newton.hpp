#pragma once

// Newton-Puiseux expansions at infinity of curves h(x, y) = c, h monic in y,
// and the Newton-Puiseux types obtained with c left symbolic.

#include "jaclab/puiseux/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace jaclab {

constexpr int kDefaultTowerDepth = 4;

/// 2 * (deg h)^2.
int default_order(const BiPoly& h);

struct Expansion {
  FractionalSeries series;  // no parameter
  int multiplicity = 1;     // number of coinciding roots represented by the truncation
  int conjugates = 1;       // degree over Q of the coefficient field
  bool exact = false;       // h(x, series) vanishes identically
  Rational leading_level;   // x-exponent of the dominant terms of h along the branch
};

/// Roots y(x) of h(x, y) = 0 at x -> infinity, truncated once the residual h(x, y(x))
/// has dropped `order` below the branch's leading level. Conjugate branches appear once.
std::vector<Expansion> expansions_at_infinity(const BiPoly& h, int order, int tower_depth = kDefaultTowerDepth);

struct NewtonPuiseuxType {
  FractionalSeries series;  // has_parameter
  UPoly h_leading;          // h_phi(xi): the x^0 coefficient of h(x, phi(x, xi))
  int sheet_count = 1;
  int conjugates = 1;
};

/// Newton-Puiseux types of h (expansions of h = c with c symbolic, cut at the first
/// c-dependent coefficient).
std::vector<NewtonPuiseuxType> puiseux_types(const BiPoly& h, int tower_depth = kDefaultTowerDepth);

struct FactorizationCheck {
  std::optional<Rational> top_residual;  // highest surviving x-exponent, none when exact
  Rational threshold;
  bool passes = false;
  int branches = 0;
};

/// Multiplies the conjugate-closed truncated expansions of h = c and compares with h - c.
/// Throws DegenerateInput when h - c is not squarefree in y.
FactorizationCheck verify_newton_factorization(const BiPoly& h, const Rational& c, int order,
                                               int tower_depth = kDefaultTowerDepth);

struct TypeConsistency {
  bool holds = true;
  std::vector<std::string> problems;
};

/// For each type phi and each root class of h_phi(xi) - c, compares the root multiplicity
/// with the number of expansions of h = c that refine phi at that root.
TypeConsistency check_type_consistency(const BiPoly& h, const std::vector<NewtonPuiseuxType>& types, const Rational& c,
                                       int order, int tower_depth = kDefaultTowerDepth);

/// Expresses `a` (a number in a field structurally identical to an ancestor of `target`)
/// inside `target`. Returns nullopt when no such ancestor exists.
std::optional<Number> transport(const Number& a, const FieldPtr& target);

}  // namespace jaclab
