#pragma once

// Critical values, exceptional value sets and fiber Euler characteristics of a single
// polynomial h: C^2 -> C.

#include "jaclab/algebra/value.hpp"
#include "jaclab/puiseux/newton.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace jaclab {

/// A Galois orbit of critical points of h, represented by one point over Q(generator).
struct CriticalPointClass {
  FieldPtr field;  // nullptr for rational points
  Number x, y;
  Number value;    // h(x, y)
  int mu = 1;      // intersection multiplicity of (h_x, h_y) at each point of the orbit
  int size = 1;    // number of points in the orbit
};

/// Isolated critical points of h. Throws DegenerateInput on a non-isolated critical locus.
std::vector<CriticalPointClass> critical_points(const BiPoly& h);

struct CriticalValues {
  QPoly eliminant;  // squarefree, monic; its roots are exactly the values
  std::vector<Value> values;
};
CriticalValues critical_values(const BiPoly& h);

struct TypeCriticalValue {
  Value value;
  int type_index;  // into puiseux_types of the y-monic normalization of h
};
std::vector<TypeCriticalValue> type_critical_values(const BiPoly& h, int tower_depth = kDefaultTowerDepth);

struct ExceptionalSetReport {
  std::vector<Value> critical_values;
  std::vector<TypeCriticalValue> type_critical_values;
  std::vector<Value> union_set;
  LinearChange normalization;  // coordinates in which the types were taken
  std::vector<std::string> warnings;
};
ExceptionalSetReport exceptional_set_poly(const BiPoly& h, int tower_depth = kDefaultTowerDepth,
                                          std::uint64_t seed = 0);

struct SingularPoint {
  Value x, y;
  int mu = 1;
};

struct FiberReport {
  Value c;
  int chi = 0;
  std::vector<SingularPoint> singular_points;
  bool is_reduced = true;
  bool is_atypical = false;
};

/// Euler characteristic of h = c. The generic value decides is_atypical; it is computed
/// with seed 0 when not supplied.
FiberReport fiber_euler_characteristic(const BiPoly& h, const Value& c, std::optional<int> generic_chi = {});

/// Common value of chi at two random rational c outside the exceptional set.
/// Throws CorrectnessAlarm when the samples disagree.
int generic_euler_characteristic(const BiPoly& h, std::uint64_t seed);

struct SuzukiReport {
  int generic_chi = 0;
  std::vector<FiberReport> candidate_values;
  int lhs = 0;
  int rhs = 0;
  bool holds = false;
};
SuzukiReport suzuki_check(const BiPoly& h, std::uint64_t seed = 0);

enum class Primitivity { primitive, composite_suspected, inconclusive };
std::string to_string(Primitivity p);

struct PrimitivityReport {
  Primitivity verdict = Primitivity::inconclusive;
  std::optional<BiPoly> inner;  // g with h = u(g), in the y-monic coordinates
  QPoly outer;                  // u
  std::string detail;
};
PrimitivityReport primitivity_check(const BiPoly& h, std::uint64_t seed = 0);

}  // namespace jaclab
