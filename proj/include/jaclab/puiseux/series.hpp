#pragma once

// Finite fractional power series in descending powers of x:
//   phi(x, xi) = sum_k a_k x^(n_k/m)  [+ xi * x^(n_K/m)]

#include "jaclab/algebra/bipoly.hpp"

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace jaclab {

struct SeriesTerm {
  int n;     // exponent numerator over the series denominator m
  Number a;  // nonzero
};

struct FractionalSeries {
  int m = 1;
  std::vector<SeriesTerm> terms;  // strictly decreasing n
  bool has_parameter = false;
  int parameter_exponent = 0;

  Rational exponent(int n) const {
    Rational r(n, m);
    r.canonicalize();
    return r;
  }
  /// Coefficient at exponent e (zero when absent).
  Number coeff_at(const Rational& e) const;
  FieldPtr field() const;
  /// Builds a series from (exponent, coefficient) pairs in decreasing order, choosing m as
  /// the lcm of the exponent denominators.
  static FractionalSeries from_terms(const std::vector<std::pair<Rational, Number>>& terms,
                                     const Rational* parameter = nullptr);
  /// Readable form, e.g. "x^(3/2) + 1/2*x^(-1/2) + s*x^(-3/2)".
  std::string render(const std::string& var = "x", const std::string& param = "s") const;
};

/// g(x, phi(x, xi)) as descending (exponent, coefficient polynomial in xi) pairs.
using GradedSeriesValue = std::vector<std::pair<Rational, UPoly>>;

/// Laurent polynomial in fractional powers of x, coefficients polynomial in xi.
using XiSeries = std::map<Rational, UPoly, std::greater<>>;

/// Exact expansion of g(x, phi(x, xi)), truncated to its first `order` exponents.
GradedSeriesValue substitute_series(const BiPoly& g, const FractionalSeries& phi, int order);
/// Full exact expansion without truncation.
XiSeries substitute_exact(const BiPoly& g, const FractionalSeries& phi);

/// Number of m-th roots of unity fixing all non-parameter terms:
/// gcd(m, gcd{n_k}) with the empty gcd equal to m.
int sheet_count(const FractionalSeries& phi);

}  // namespace jaclab
