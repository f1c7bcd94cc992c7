#pragma once

// Exact number fields built as towers over Q.
//
// Every tower level L is stored through a primitive element: L = Q(theta_L) with the
// minimal polynomial of theta_L over Q, together with the images of all ancestor
// generators and of the adjoined root as polynomials in theta_L. Elements are reduced
// polynomials in theta_L with rational coefficients, so equality is exact comparison.

#include "jaclab/algebra/qpoly.hpp"
#include "jaclab/algebra/roots.hpp"

#include <memory>
#include <string>
#include <vector>

namespace jaclab {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
public:
  struct Level {
    FieldPtr parent;              // nullptr when the level sits directly over Q
    std::string name;             // name of the adjoined root
    std::vector<QPoly> defining;  // defining polynomial over the parent, coefficients as parent reprs
    QPoly minpoly;                // minimal polynomial of the primitive generator over Q
    QPoly parent_generator;       // parent's primitive generator in terms of ours (empty over Q)
    QPoly adjoined;               // the adjoined root in terms of our generator
    Complex generator_value;      // chosen complex embedding of the generator
  };

  explicit Field(Level level);

  const FieldPtr& parent() const { return level_.parent; }
  const std::string& name() const { return level_.name; }
  const QPoly& minpoly() const { return level_.minpoly; }
  const std::vector<QPoly>& defining() const { return level_.defining; }
  const QPoly& adjoined() const { return level_.adjoined; }
  int degree() const { return qp::degree(level_.minpoly); }
  int depth() const { return depth_; }
  const Complex& generator_value() const { return level_.generator_value; }
  ComplexBox generator_box() const;

  /// Image of the primitive generator of the ancestor at `depth` (1-based) in this field.
  const QPoly& ancestor_generator(int depth) const { return ancestor_images_.at(depth - 1); }
  bool has_ancestor(const Field* other) const;

private:
  Level level_;
  int depth_;
  std::vector<QPoly> ancestor_images_;
};

/// Element of Q or of a tower level.
class Number {
public:
  Number() = default;
  Number(long v) : repr_(v == 0 ? QPoly{} : QPoly{Rational(v)}) {}  // NOLINT(google-explicit-constructor)
  Number(const Rational& r) : repr_(r == 0 ? QPoly{} : QPoly{r}) {}  // NOLINT(google-explicit-constructor)
  Number(FieldPtr field, QPoly repr);

  static Number generator(const FieldPtr& field);

  const FieldPtr& field() const { return field_; }
  const QPoly& repr() const { return repr_; }
  bool is_zero() const { return repr_.empty(); }
  bool is_rational() const { return repr_.size() <= 1; }
  Rational to_rational() const;  // throws unless is_rational()

  Number lift(const FieldPtr& target) const;
  Number inverse() const;
  Complex approx() const;

  Number operator-() const;
  friend Number operator+(const Number& a, const Number& b);
  friend Number operator-(const Number& a, const Number& b);
  friend Number operator*(const Number& a, const Number& b);
  friend Number operator/(const Number& a, const Number& b);
  Number& operator+=(const Number& b) { return *this = *this + b; }
  Number& operator-=(const Number& b) { return *this = *this - b; }
  Number& operator*=(const Number& b) { return *this = *this * b; }
  friend bool operator==(const Number& a, const Number& b);
  friend bool operator!=(const Number& a, const Number& b) { return !(a == b); }

  /// Rational literal, or a polynomial in the field generator wrapped in parentheses.
  std::string render() const;

private:
  FieldPtr field_;
  QPoly repr_;
};

/// Smallest of the two fields containing the other; throws when they lie on different branches.
FieldPtr common_field(const FieldPtr& a, const FieldPtr& b);

/// Minimal polynomial of an element over Q (monic, irreducible).
QPoly minimal_polynomial(const Number& a);

}  // namespace jaclab
