#pragma once

// Exact complex algebraic values: a root of an irreducible rational polynomial,
// identified by its position in the canonical root order.

#include "jaclab/algebra/field.hpp"

#include <string>
#include <vector>

namespace jaclab {

class Value {
public:
  Value() : minpoly_{0, 1} {}
  Value(const Rational& r) : minpoly_{-r, 1} {}  // NOLINT(google-explicit-constructor)
  static Value from_number(const Number& n);
  /// All roots of an irreducible monic polynomial, in canonical order.
  static std::vector<Value> roots_of(const QPoly& irreducible);
  /// Distinct roots of any nonzero polynomial (factored over Q), sorted.
  static std::vector<Value> all_roots(const QPoly& p);

  const QPoly& minpoly() const { return minpoly_; }
  int index() const { return index_; }
  int degree() const { return qp::degree(minpoly_); }
  bool is_rational() const { return degree() == 1; }
  Rational rational() const;
  Complex approx() const;
  ComplexBox box() const;
  /// Q(value) with the generator embedded as this root.
  FieldPtr field(const std::string& name = "c") const;
  Number number(const std::string& name = "c") const;

  /// "p/q" for rationals, otherwise "root #i of <minpoly>".
  std::string describe(const std::string& var = "c") const;

  friend bool operator==(const Value& a, const Value& b) { return a.index_ == b.index_ && a.minpoly_ == b.minpoly_; }
  friend bool operator!=(const Value& a, const Value& b) { return !(a == b); }
  friend bool operator<(const Value& a, const Value& b);

private:
  Value(QPoly minpoly, int index) : minpoly_(std::move(minpoly)), index_(index) {}
  QPoly minpoly_;
  int index_ = 0;
};

/// The root of an irreducible monic `minpoly` nearest to z.
Value value_near(const QPoly& minpoly, const Complex& z);
/// Image of a under the embedding of its field that sends the primitive generator to z.
Complex embed(const Number& a, const Complex& z);
/// One row per complex embedding of `field` (a single row for Q): the values of `nums` there.
std::vector<std::vector<Value>> conjugate_values(const std::vector<Number>& nums, const FieldPtr& field);

/// Sorted, duplicate-free union.
std::vector<Value> merge_values(std::vector<Value> a, const std::vector<Value>& b);
bool contains(const std::vector<Value>& set, const Value& v);

}  // namespace jaclab
