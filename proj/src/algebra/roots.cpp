#include "jaclab/algebra/roots.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>

namespace jaclab {

namespace {

Rational to_dyadic(long double v, int bits) {
  long double scaled = std::ldexp(v, bits);
  long double r = std::nearbyint(scaled);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.0Lf", r);
  Rational q{Integer(buf)};
  Integer den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(bits));
  q /= den;
  return q;
}

long double to_ld(const Rational& r) {
  // high and low doubles keep more than double precision
  mpf_class f(r, 128);
  double hi = f.get_d();
  mpf_class rest = f - mpf_class(hi, 128);
  return static_cast<long double>(hi) + static_cast<long double>(rest.get_d());
}

std::vector<Complex> polish(const std::vector<Complex>& coeffs, std::vector<Complex> roots) {
  auto eval = [&](const Complex& z, Complex& d) {
    Complex v = 0;
    d = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
      d = d * z + v;
      v = v * z + coeffs[i];
    }
    return v;
  };
  for (auto& z : roots) {
    for (int it = 0; it < 60; ++it) {
      Complex d;
      Complex v = eval(z, d);
      if (std::abs(d) == 0) break;
      Complex step = v / d;
      Complex next = z - step, dn;
      if (std::abs(eval(next, dn)) >= std::abs(v)) break;
      z = next;
      if (std::abs(step) <= 1e-30L * (1 + std::abs(z))) break;
    }
  }
  return roots;
}

}  // namespace

bool ComplexBox::contains(const Complex& z) const {
  return to_ld(re_lo) <= z.real() && z.real() <= to_ld(re_hi) && to_ld(im_lo) <= z.imag() && z.imag() <= to_ld(im_hi);
}

bool canonical_less(const Complex& a, const Complex& b) {
  long double tol = 1e-12L * (1 + std::max(std::abs(a.real()), std::abs(b.real())));
  if (std::abs(a.real() - b.real()) > tol) return a.real() < b.real();
  return a.imag() < b.imag();
}

std::vector<Complex> approximate_roots(const std::vector<Complex>& coeffs_in) {
  std::vector<Complex> coeffs(coeffs_in);
  while (!coeffs.empty() && std::abs(coeffs.back()) == 0) coeffs.pop_back();
  int n = static_cast<int>(coeffs.size()) - 1;
  if (n <= 0) return {};
  std::vector<Complex> roots;
  if (n == 1) {
    roots.push_back(-coeffs[0] / coeffs[1]);
  } else {
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) {
      Complex c = -coeffs[i] / coeffs[n];
      companion(i, n - 1) = std::complex<double>(static_cast<double>(c.real()), static_cast<double>(c.imag()));
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    for (int i = 0; i < n; ++i) {
      auto z = solver.eigenvalues()(i);
      roots.emplace_back(z.real(), z.imag());
    }
    roots = polish(coeffs, roots);
  }
  // exact-real roots: clean tiny imaginary noise so conjugate ordering is stable
  for (auto& z : roots)
    if (std::abs(z.imag()) < 1e-24L * (1 + std::abs(z.real()))) z = Complex(z.real(), 0);
  std::sort(roots.begin(), roots.end(), canonical_less);
  return roots;
}

std::vector<Complex> approximate_roots(const QPoly& p) {
  std::vector<Complex> coeffs;
  coeffs.reserve(p.size());
  for (const auto& c : p) coeffs.emplace_back(to_ld(c), 0);
  auto roots = approximate_roots(coeffs);
  for (auto& z : roots)
    if (std::abs(z.imag()) < 1e-13L * (1 + std::abs(z))) z = Complex(z.real(), 0);
  std::sort(roots.begin(), roots.end(), canonical_less);
  return roots;
}

ComplexBox isolating_box(const std::vector<Complex>& roots, std::size_t i) {
  long double sep = std::numeric_limits<long double>::infinity();
  for (std::size_t j = 0; j < roots.size(); ++j)
    if (j != i) sep = std::min(sep, std::abs(roots[j] - roots[i]));
  long double half = std::isinf(sep) ? 0.5L : sep / 4;
  int bits = 40;
  while (bits < 200 && std::ldexp(1.0L, -bits) > half / 16) bits += 8;
  Rational w = to_dyadic(half, bits);
  if (w <= 0) w = Rational(1, 1 << 30);
  Rational re = to_dyadic(roots[i].real(), bits), im = to_dyadic(roots[i].imag(), bits);
  return {re - w, re + w, im - w, im + w};
}

std::size_t nearest_root(const std::vector<Complex>& roots, const Complex& z) {
  std::size_t best = 0;
  long double dist = std::numeric_limits<long double>::infinity();
  for (std::size_t i = 0; i < roots.size(); ++i) {
    long double d = std::abs(roots[i] - z);
    if (d < dist) {
      dist = d;
      best = i;
    }
  }
  return best;
}

Complex eval_complex(const QPoly& p, const Complex& z) {
  Complex v = 0;
  for (std::size_t i = p.size(); i-- > 0;) v = v * z + Complex(to_ld(p[i]), 0);
  return v;
}

}  // namespace jaclab
