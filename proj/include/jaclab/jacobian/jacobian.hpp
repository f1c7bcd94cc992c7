#pragma once

// Map-level analysis of f = (P, Q): Jacobian, exceptional set, vertical tangencies and
// the checkers for the constant-Jacobian statements.

#include "jaclab/fibration/fibration.hpp"
#include "jaclab/properness/properness.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace jaclab {

BiPoly jacobian(const BiPoly& P, const BiPoly& Q);

struct CriticalImage {
  BiPoly curve;                                 // squarefree in (u, v); 1 when no curve part
  std::vector<std::pair<Value, Value>> points;  // images of components contracted to a point
};
/// Image of {J = 0} under f, component by component.
CriticalImage critical_value_image(const BiPoly& P, const BiPoly& Q);

struct MapAnalysis {
  BiPoly jacobian;
  bool is_const_nonzero = false;
  CriticalImage critical;  // empty when the Jacobian is a nonzero constant
  NonProperSet nonproper;
  BiPoly exceptional_curve;  // squarefree product of the curve parts, 1 when none
  std::string exceptional_set;
};
MapAnalysis exceptional_set_map(const BiPoly& P, const BiPoly& Q, int tower_depth = kDefaultTowerDepth);

struct TangencyValue {
  Value u0;
  int component = 0;
  Value xi0;
};
struct TangencyReport {
  std::vector<TangencyValue> values;       // critical values of p_phi over components with p_phi non-constant
  std::vector<Value> vertical_components;  // u0 for components equal to a line u = u0
  std::vector<int> vertical_indices;
  std::vector<Value> all_values() const;   // values and vertical lines merged
};
TangencyReport vertical_tangency_values(const NonProperSet& nonproper);

struct Theorem1Report {
  bool hypothesis_met = false;  // J is a nonzero constant
  std::vector<Value> e_p;
  TangencyReport tangency;
  bool biconditional_holds = false;
  std::string note;
};
/// Compares E_P with the set of u0 whose vertical line u = u0 is tangent to (or is) a
/// component of the non-proper set.
Theorem1Report check_theorem1(const BiPoly& P, const BiPoly& Q, int tower_depth = kDefaultTowerDepth,
                              std::uint64_t seed = 0);

struct Lemma6Row {
  int type_index = 0;
  FractionalSeries series;
  bool is_dicritical = false;
  int deg_p = 0;
  std::optional<Value> q_const;  // leading coefficient of Q(x, phi) when constant in the parameter
  int b_exp = 0;
  bool passes = false;
};
struct Lemma6Report {
  bool hypothesis_met = false;
  std::vector<Lemma6Row> rows;
  bool all_pass() const;
};
/// For each Newton-Puiseux type of P: dicritical, or deg p_phi = 1 with Q(x, phi) having a
/// nonzero constant leading coefficient at a positive exponent.
Lemma6Report check_lemma6(const BiPoly& P, const BiPoly& Q, int tower_depth = kDefaultTowerDepth);

struct Theorem2Component {
  QPoly p, q;
  bool monomial_first = false;  // p = a t^k, k >= 1
  int k = 0;
  bool line_like = false;
};
struct Theorem2Report {
  std::string verdict;  // "excluded-by-theorem-2" or "no-conclusion"
  std::vector<Theorem2Component> components;
  std::vector<std::string> citations;
};
/// Whether every component t -> (p(t), q(t)) literally has the form (a t^k, q(t)).
Theorem2Report theorem2_verdict(const std::vector<std::pair<QPoly, QPoly>>& components);

struct TameAutomorphism {
  BiPoly P, Q;
  std::vector<std::string> steps;
};
/// Composition of up to `max_factors` elementary automorphisms (x, y + g(x)), (x + g(y), y)
/// with deg g <= max_degree and total degree of the result at most `degree_cap`.
TameAutomorphism random_tame_automorphism(std::uint64_t seed, int max_factors = 4, int max_degree = 3,
                                          int degree_cap = 6);

}  // namespace jaclab
