#include "jaclab/puiseux/series.hpp"

#include <numeric>
#include <stdexcept>

namespace jaclab {

namespace {

XiSeries mul(const XiSeries& a, const XiSeries& b) {
  XiSeries r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      Rational e = ea + eb;
      UPoly c = r[e] + ca * cb;
      if (c.is_zero())
        r.erase(e);
      else
        r[e] = std::move(c);
    }
  return r;
}

void add_into(XiSeries& a, const XiSeries& b) {
  for (const auto& [e, c] : b) {
    UPoly s = a[e] + c;
    if (s.is_zero())
      a.erase(e);
    else
      a[e] = std::move(s);
  }
}

std::string exponent_text(const Rational& e) {
  if (e.get_den() == 1) return e < 0 ? "(" + to_string(e) + ")" : to_string(e);
  return "(" + to_string(e) + ")";
}

}  // namespace

Number FractionalSeries::coeff_at(const Rational& e) const {
  for (const auto& t : terms)
    if (exponent(t.n) == e) return t.a;
  return Number();
}

FieldPtr FractionalSeries::field() const {
  FieldPtr f;
  for (const auto& t : terms) f = common_field(f, t.a.field());
  return f;
}

FractionalSeries FractionalSeries::from_terms(const std::vector<std::pair<Rational, Number>>& terms,
                                              const Rational* parameter) {
  Integer m = 1;
  for (const auto& [e, a] : terms) mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), e.get_den_mpz_t());
  if (parameter) mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), parameter->get_den_mpz_t());
  FractionalSeries s;
  s.m = static_cast<int>(m.get_si());
  for (const auto& [e, a] : terms) {
    if (a.is_zero()) continue;
    Rational n = e * Rational(m);
    s.terms.push_back({static_cast<int>(n.get_num().get_si()), a});
  }
  for (std::size_t i = 1; i < s.terms.size(); ++i)
    if (s.terms[i].n >= s.terms[i - 1].n) throw std::logic_error("series exponents must strictly decrease");
  if (parameter) {
    s.has_parameter = true;
    Rational n = *parameter * Rational(m);
    s.parameter_exponent = static_cast<int>(n.get_num().get_si());
  }
  return s;
}

std::string FractionalSeries::render(const std::string& var, const std::string& param) const {
  std::string out;
  auto mono = [&](const Rational& e) -> std::string {
    if (e == 0) return "";
    if (e == 1) return var;
    return var + "^" + exponent_text(e);
  };
  for (const auto& t : terms) {
    Rational e = exponent(t.n);
    std::string m = mono(e);
    std::string c;
    bool neg = false;
    if (t.a.is_rational()) {
      Rational r = t.a.to_rational();
      neg = r < 0;
      if (neg) r = -r;
      if (!(r == 1 && !m.empty())) c = to_string(r);
    } else {
      c = t.a.render();
    }
    if (out.empty())
      out = neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    out += c;
    if (!c.empty() && !m.empty()) out += "*";
    out += m;
  }
  if (has_parameter) {
    std::string m = mono(exponent(parameter_exponent));
    if (!out.empty()) out += " + ";
    out += param + (m.empty() ? "" : "*" + m);
  }
  return out.empty() ? "0" : out;
}

XiSeries substitute_exact(const BiPoly& g, const FractionalSeries& phi) {
  XiSeries y;
  for (const auto& t : phi.terms) y[phi.exponent(t.n)] = UPoly(t.a);
  if (phi.has_parameter) {
    UPoly xi = UPoly::x();
    UPoly c = y[phi.exponent(phi.parameter_exponent)] + xi;
    y[phi.exponent(phi.parameter_exponent)] = c;
  }
  // Horner in y with x-polynomial coefficients
  auto coeffs = g.coefficients(1);
  XiSeries r;
  for (std::size_t j = coeffs.size(); j-- > 0;) {
    r = mul(r, y);
    XiSeries cj;
    for (int i = 0; i <= coeffs[j].degree(); ++i)
      if (!coeffs[j][i].is_zero()) cj[Rational(i)] = UPoly(coeffs[j][i]);
    add_into(r, cj);
  }
  return r;
}

GradedSeriesValue substitute_series(const BiPoly& g, const FractionalSeries& phi, int order) {
  if (order < 1) throw std::invalid_argument("order must be positive");
  GradedSeriesValue out;
  for (const auto& [e, c] : substitute_exact(g, phi)) {
    if (static_cast<int>(out.size()) >= order) break;
    out.emplace_back(e, c);
  }
  return out;
}

int sheet_count(const FractionalSeries& phi) {
  int g = phi.m;
  for (const auto& t : phi.terms) g = std::gcd(g, std::abs(t.n));
  return g;
}

}  // namespace jaclab
