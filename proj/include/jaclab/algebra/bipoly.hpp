#pragma once

// Sparse bivariate polynomials over a tower field. The two variables are positional:
// index 0 ("first", usually x or u) and index 1 ("second", usually y or v).

#include "jaclab/algebra/upoly.hpp"

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace jaclab {

using Exponent = std::pair<int, int>;  // (first, second)

class BiPoly {
public:
  BiPoly() = default;
  BiPoly(const Number& c);  // NOLINT(google-explicit-constructor)
  BiPoly(long c) : BiPoly(Number(c)) {}  // NOLINT(google-explicit-constructor)
  static BiPoly monomial(const Number& c, int i, int j);
  static BiPoly var(int index) { return index == 0 ? monomial(Number(1), 1, 0) : monomial(Number(1), 0, 1); }
  /// Polynomial in one variable only, placed in the given slot.
  static BiPoly from_univariate(const UPoly& p, int index);
  /// Builds sum_j coeffs[j](other) * var^j.
  static BiPoly from_coefficients(const std::vector<UPoly>& coeffs, int index);

  const std::map<Exponent, Number>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const;
  Number constant_term() const;
  Number coeff(int i, int j) const;
  int degree() const;  // total degree, -1 for zero
  int degree(int index) const;

  /// Coefficients with respect to the variable `index`, as polynomials in the other variable.
  std::vector<UPoly> coefficients(int index) const;
  /// Leading coefficient with respect to `index`.
  UPoly lead(int index) const;
  /// Homogeneous part of top total degree.
  BiPoly leading_form() const;

  FieldPtr field() const;
  bool is_rational() const;
  BiPoly lift(const FieldPtr& f) const;

  BiPoly operator-() const;
  friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const Number& c, const BiPoly& a);
  BiPoly& operator+=(const BiPoly& b) { return *this = *this + b; }
  friend bool operator==(const BiPoly& a, const BiPoly& b);
  friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

  BiPoly derivative(int index) const;
  Number eval(const Number& a, const Number& b) const;
  /// Fixes variable `index` to `value`, leaving a polynomial in the other variable.
  UPoly specialize(int index, const Number& value) const;
  /// p(sx(first, second), sy(first, second)).
  BiPoly compose(const BiPoly& first, const BiPoly& second) const;
  BiPoly swapped() const;

  /// Terms ordered by second-variable degree, then first-variable degree, both descending.
  std::string render(const std::string& first, const std::string& second) const;

private:
  void add_term(const Exponent& e, const Number& c);
  std::map<Exponent, Number> t_;
};

BiPoly pow(const BiPoly& a, unsigned e);

namespace bp {

/// Res_var(p, q) as a polynomial in the other variable (equals the Sylvester determinant).
UPoly resultant(const BiPoly& p, const BiPoly& q, int var);
/// Exact quotient a / b, or false if b does not divide a.
bool divide(const BiPoly& a, const BiPoly& b, BiPoly* quotient);
BiPoly gcd(const BiPoly& a, const BiPoly& b);
/// p / gcd(p, dp/dvar), scaled so the leading coefficient (lexicographic, `var` major) is 1.
/// Repeated factors of the content in `var` are removed as well.
BiPoly squarefree_part(const BiPoly& p, int var);
/// Full squarefree part with respect to both variables.
BiPoly squarefree_part(const BiPoly& p);
/// Scales a rational polynomial to integer coprime coefficients with positive leading term.
BiPoly integer_normalize(const BiPoly& p);
/// Makes the leading term (lexicographic, second variable major) equal to 1.
BiPoly monic_normalize_lex(const BiPoly& p);
/// Distinct irreducible factors over Q of a non-constant rational polynomial, integer-normalized.
std::vector<BiPoly> irreducible_factors(const BiPoly& p);
/// Polynomial interpolating values[i][j] at (xs[i], ys[j]).
BiPoly interpolate2d(const std::vector<Number>& xs, const std::vector<Number>& ys,
                     const std::vector<std::vector<Number>>& values);

}  // namespace bp

/// Linear substitution x -> a x + b y, y -> c x + d y with rational entries.
struct LinearChange {
  std::array<Rational, 4> m{1, 0, 0, 1};  // a, b, c, d

  static LinearChange identity() { return {}; }
  static LinearChange shear(long t) { return {{1, t, 0, 1}}; }
  Rational determinant() const { return m[0] * m[3] - m[1] * m[2]; }
  LinearChange inverse() const;
  bool is_identity() const;
  BiPoly apply(const BiPoly& p) const;
  /// Human-readable form such as "x -> x + y".
  std::string describe(const std::string& first, const std::string& second) const;
};

struct Normalization {
  std::vector<BiPoly> polys;  // transformed and divided by their leading second-variable coefficient
  std::vector<Number> scales;  // the divided-out constants
  LinearChange change;
};

/// Finds a shear x -> x + t y (t = 0, 1, -1, 2, ...) that makes every input monic in y
/// with deg_y = deg, then divides each by its constant leading coefficient.
Normalization monic_normalize(const std::vector<BiPoly>& polys);
/// Identity when every input already has positive y-degree and a constant leading
/// y-coefficient, otherwise monic_normalize. Polys are divided by their leading coefficients.
Normalization y_normalize(const std::vector<BiPoly>& polys);
/// Whether deg_y p = deg p with a constant leading y-coefficient.
bool is_monic_in_second(const BiPoly& p);

}  // namespace jaclab
