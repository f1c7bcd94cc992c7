// Factorization of rational bivariate polynomials: specialize x, factor over Q, lift the
// factors x-adically and recombine by trial division.

#include "jaclab/algebra/bipoly.hpp"
#include "jaclab/algebra/factor_q.hpp"
#include "jaclab/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace jaclab {

namespace {

using XPoly = std::vector<QPoly>;  // XPoly[k] = coefficient of x^k, a polynomial in y

XPoly to_x(const BiPoly& p) {
  XPoly out;
  for (const auto& c : p.coefficients(0)) out.push_back(c.to_rational());
  return out;
}

BiPoly from_x(const XPoly& a) {
  std::vector<UPoly> coeffs;
  for (const auto& c : a) coeffs.push_back(UPoly::from_rational(c));
  return BiPoly::from_coefficients(coeffs, 0);
}

XPoly mul_trunc(const XPoly& a, const XPoly& b, int prec) {
  XPoly r(prec);
  for (std::size_t i = 0; i < a.size() && static_cast<int>(i) < prec; ++i)
    for (std::size_t j = 0; j < b.size() && static_cast<int>(i + j) < prec; ++j)
      r[i + j] = qp::add(r[i + j], qp::mul(a[i], b[j]));
  return r;
}

// F = G H mod x^prec with G(0) = g0, H(0) = h0 coprime and monic.
void hensel(const XPoly& F, const QPoly& g0, const QPoly& h0, int prec, XPoly& G, XPoly& H) {
  auto [g, s, t] = qp::ext_gcd(g0, h0);
  if (qp::degree(g) != 0) throw std::logic_error("Hensel lifting needs coprime factors");
  G.assign(prec, {});
  H.assign(prec, {});
  G[0] = g0;
  H[0] = h0;
  for (int k = 1; k < prec; ++k) {
    QPoly e = k < static_cast<int>(F.size()) ? F[k] : QPoly{};
    for (int i = 0; i <= k; ++i) e = qp::sub(e, qp::mul(G[i], H[k - i]));
    if (e.empty()) continue;
    G[k] = qp::rem(qp::mul(t, e), g0);
    H[k] = qp::rem(qp::mul(s, e), h0);
  }
}

long point(int k) { return k == 0 ? 0 : (k % 2 ? (k + 1) / 2 : -(k / 2)); }

// F rational, squarefree, with leading y-coefficient 1.
std::vector<BiPoly> factor_monic(const BiPoly& F) {
  int d = F.degree(1), dx = F.degree(0);
  if (d <= 1) return {F};
  if (dx == 0) {
    std::vector<BiPoly> out;
    for (const auto& f : factor_rational(F.specialize(0, Number(0)).to_rational()))
      out.push_back(BiPoly::from_univariate(UPoly::from_rational(f.factor), 1));
    return out;
  }
  long x0 = 0;
  BiPoly shifted;
  QPoly f0;
  for (int k = 0;; ++k) {
    if (k > 4 * (d * dx + 2)) throw ResourceLimit("no squarefree specialization for factorization");
    x0 = point(k);
    shifted = F.compose(BiPoly::var(0) + BiPoly(Number(Rational(x0))), BiPoly::var(1));
    f0 = shifted.specialize(0, Number(0)).to_rational();
    if (qp::is_squarefree(f0)) break;
  }
  auto facs = factor_rational(f0);
  if (facs.size() == 1) return {F};
  if (facs.size() > 20) throw ResourceLimit("too many modular factors to recombine");
  int prec = dx + 1;
  std::vector<XPoly> lifted;
  XPoly rest = to_x(shifted);
  for (std::size_t i = 0; i + 1 < facs.size(); ++i) {
    QPoly others{1};
    for (std::size_t j = i + 1; j < facs.size(); ++j) others = qp::mul(others, facs[j].factor);
    XPoly G, H;
    hensel(rest, facs[i].factor, others, prec, G, H);
    lifted.push_back(G);
    rest = H;
  }
  lifted.push_back(rest);

  std::vector<BiPoly> out;
  std::vector<int> left(lifted.size());
  for (std::size_t i = 0; i < left.size(); ++i) left[i] = static_cast<int>(i);
  BiPoly remaining = shifted;
  for (std::size_t size = 1; 2 * size <= left.size();) {
    bool found = false;
    std::size_t n = left.size();
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(size), true);
    do {
      XPoly prod{{1}};
      for (std::size_t i = 0; i < n; ++i)
        if (pick[i]) prod = mul_trunc(prod, lifted[left[i]], prec);
      BiPoly cand = from_x(prod), q;
      if (bp::divide(remaining, cand, &q)) {
        out.push_back(cand);
        remaining = q;
        std::vector<int> next;
        for (std::size_t i = 0; i < n; ++i)
          if (!pick[i]) next.push_back(left[i]);
        left = next;
        found = true;
        break;
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
    if (!found) ++size;
  }
  out.push_back(remaining);
  BiPoly back = BiPoly::var(0) - BiPoly(Number(Rational(x0)));
  for (auto& g : out) g = g.compose(back, BiPoly::var(1));
  return out;
}

}  // namespace

namespace bp {

std::vector<BiPoly> irreducible_factors(const BiPoly& p) {
  if (!p.is_rational()) throw std::invalid_argument("bivariate factorization needs rational coefficients");
  if (p.is_constant()) return {};
  BiPoly s = squarefree_part(p);
  Normalization n = monic_normalize({s});
  LinearChange inv = n.change.inverse();
  std::vector<BiPoly> out;
  for (const auto& g : factor_monic(n.polys[0])) out.push_back(integer_normalize(inv.apply(g)));
  std::sort(out.begin(), out.end(), [](const BiPoly& a, const BiPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.render("x", "y") < b.render("x", "y");
  });
  return out;
}

}  // namespace bp

}  // namespace jaclab
