#pragma once

// Dense univariate polynomials with coefficients in a tower field.

#include "jaclab/algebra/field.hpp"

#include <string>
#include <utility>
#include <vector>

namespace jaclab {

class UPoly {
public:
  UPoly() = default;
  UPoly(std::vector<Number> coeffs);  // NOLINT(google-explicit-constructor)
  UPoly(const Number& c);             // NOLINT(google-explicit-constructor)
  static UPoly from_rational(const QPoly& p);
  static UPoly monomial(const Number& c, int k);
  static UPoly x() { return monomial(Number(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const Number& lead() const;
  const Number& operator[](std::size_t i) const;
  Number coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Number(); }
  const std::vector<Number>& coeffs() const { return c_; }

  bool is_rational() const;
  QPoly to_rational() const;
  /// Smallest field containing all coefficients.
  FieldPtr field() const;

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const Number& c, const UPoly& a);
  friend bool operator==(const UPoly& a, const UPoly& b);
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

  Number eval(const Number& x) const;
  UPoly derivative() const;
  UPoly monic() const;
  /// p(q(x))
  UPoly compose(const UPoly& q) const;
  UPoly lift(const FieldPtr& f) const;

  std::string render(const std::string& var) const;

private:
  void trim();
  std::vector<Number> c_;
};

namespace up {
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
UPoly gcd(const UPoly& a, const UPoly& b);  // monic
UPoly pow(const UPoly& a, unsigned e);
/// Resultant of a and b via the Euclidean remainder sequence over the field.
Number resultant(const UPoly& a, const UPoly& b);
UPoly squarefree_part(const UPoly& a);
bool is_squarefree(const UPoly& a);
/// Multiplicity of `factor` in `a` (factor non-constant).
int multiplicity(const UPoly& factor, const UPoly& a);

/// Irreducible monic factors with multiplicities over the coefficient field of `a`
/// (Trager's norm method on top of rational factorization).
struct Factor {
  UPoly factor;
  int multiplicity;
};
std::vector<Factor> factor(const UPoly& a);
/// Factorization over an explicit field, which must contain the coefficients.
std::vector<Factor> factor_over(const UPoly& a, const FieldPtr& field);

/// Norm down to Q: product of all conjugates of a over Q.
QPoly norm(const UPoly& a);
/// Norm from an explicit field containing the coefficients.
QPoly norm_over(const UPoly& a, const FieldPtr& field);

/// Interpolates the polynomial of degree <= n through (xs[i], ys[i]).
UPoly interpolate(const std::vector<Number>& xs, const std::vector<Number>& ys);
}  // namespace up

/// Adjoins a root of `g` (irreducible over `base`, degree >= 2) and returns the new level.
/// Throws ResourceLimit when the tower would exceed `depth_limit` levels.
FieldPtr extend_field(const FieldPtr& base, const UPoly& g, int depth_limit);

}  // namespace jaclab
