#pragma once

// Numeric root approximation. Used only to name individual complex roots of exact
// polynomials (isolating boxes) and to pick among conjugates; never for deciding equality.

#include "jaclab/algebra/qpoly.hpp"

#include <complex>
#include <vector>

namespace jaclab {

using Complex = std::complex<long double>;

/// Axis-aligned box with rational corners.
struct ComplexBox {
  Rational re_lo, re_hi, im_lo, im_hi;
  bool contains(const Complex& z) const;
};

/// Approximates all complex roots of a squarefree polynomial (companion matrix eigenvalues,
/// Newton-polished in long double) in the canonical order: by real part, then imaginary part.
std::vector<Complex> approximate_roots(const QPoly& p);

/// Same, for a polynomial with complex coefficients (low degree first).
std::vector<Complex> approximate_roots(const std::vector<Complex>& coeffs);

/// Box around roots[i] with half-width a quarter of the distance to the nearest other root.
ComplexBox isolating_box(const std::vector<Complex>& roots, std::size_t i);

std::size_t nearest_root(const std::vector<Complex>& roots, const Complex& z);

bool canonical_less(const Complex& a, const Complex& b);

Complex eval_complex(const QPoly& p, const Complex& z);

}  // namespace jaclab
