#include "jaclab/algebra/qpoly.hpp"

#include <stdexcept>

namespace jaclab {

std::string to_string(const Rational& r) { return r.get_str(); }

Rational rational_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  std::size_t slash = s.find('/');
  auto valid_int = [](const std::string& t, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && i < t.size() && (t[i] == '-' || t[i] == '+')) ++i;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false)) throw std::invalid_argument("malformed rational: " + s);
  if (num[0] == '+') num = num.substr(1);
  Integer n(num), d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: " + s);
  Rational r(n, d);
  r.canonicalize();
  return r;
}

namespace qp {

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

const Rational& lead(const QPoly& p) {
  static const Rational zero(0);
  return p.empty() ? zero : p.back();
}

bool is_zero(const QPoly& p) { return p.empty(); }

QPoly add(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

QPoly sub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

QPoly scale(const QPoly& a, const Rational& c) {
  if (c == 0) return {};
  QPoly r(a);
  for (auto& x : r) x *= c;
  return r;
}

QPoly neg(const QPoly& a) { return scale(a, Rational(-1)); }

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  QPoly r(a);
  trim(r);
  int db = degree(b);
  if (degree(r) < db) return {{}, r};
  QPoly q(r.size() - b.size() + 1);
  Rational inv = 1 / b.back();
  for (int k = degree(r); k >= db; --k) {
    Rational c = r[k] * inv;
    q[k - db] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) r[k - db + j] -= c * b[j];
  }
  trim(q);
  r.resize(db);
  trim(r);
  return {q, r};
}

QPoly rem(const QPoly& a, const QPoly& b) { return divmod(a, b).second; }

QPoly monic(const QPoly& a) {
  if (a.empty()) return {};
  return scale(a, 1 / a.back());
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  QPoly x(a), y(b);
  trim(x);
  trim(y);
  while (!y.empty()) {
    QPoly r = rem(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

std::tuple<QPoly, QPoly, QPoly> ext_gcd(const QPoly& a, const QPoly& b) {
  QPoly r0(a), r1(b), s0{1}, s1{}, t0{}, t1{1};
  trim(r0);
  trim(r1);
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    QPoly s2 = sub(s0, mul(q, s1));
    QPoly t2 = sub(t0, mul(q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) return {{}, {}, {}};
  Rational inv = 1 / r0.back();
  return {scale(r0, inv), scale(s0, inv), scale(t0, inv)};
}

QPoly derivative(const QPoly& a) {
  if (a.size() <= 1) return {};
  QPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * static_cast<long>(i);
  trim(r);
  return r;
}

Rational eval(const QPoly& a, const Rational& x) {
  Rational r = 0;
  for (std::size_t i = a.size(); i-- > 0;) r = r * x + a[i];
  return r;
}

QPoly mulmod(const QPoly& a, const QPoly& b, const QPoly& m) { return rem(mul(a, b), m); }

QPoly compose(const QPoly& a, const QPoly& b, const QPoly& m) {
  QPoly r;
  for (std::size_t i = a.size(); i-- > 0;) {
    r = m.empty() ? mul(r, b) : mulmod(r, b, m);
    r = add(r, QPoly{a[i]});
  }
  return r;
}

QPoly invmod(const QPoly& a, const QPoly& m) {
  auto [g, s, t] = ext_gcd(a, m);
  (void)t;
  if (degree(g) != 0) throw std::domain_error("element is not invertible modulo the defining polynomial");
  return rem(s, m);
}

QPoly pow(const QPoly& a, unsigned e) {
  QPoly r{1}, base(a);
  while (e) {
    if (e & 1u) r = mul(r, base);
    e >>= 1u;
    if (e) base = mul(base, base);
  }
  return r;
}

QPoly squarefree_part(const QPoly& a) {
  if (degree(a) <= 0) return monic(a);
  return monic(divmod(a, gcd(a, derivative(a))).first);
}

bool is_squarefree(const QPoly& a) { return degree(gcd(a, derivative(a))) <= 0; }

QPoly monomial(const Rational& c, int k) {
  if (c == 0) return {};
  QPoly r(k + 1);
  r[k] = c;
  return r;
}

ZPoly primitive_integer(const QPoly& a) {
  if (a.empty()) return {};
  Integer l = 1;
  for (const auto& c : a) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  ZPoly z(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) z[i] = a[i].get_num() * (l / a[i].get_den());
  Integer g = zp::content(z);
  if (z.back() < 0) g = -g;
  for (auto& c : z) c /= g;
  return z;
}

QPoly from_integer(const ZPoly& a) {
  QPoly r(a.begin(), a.end());
  trim(r);
  return r;
}

std::string render(const QPoly& a, const std::string& var) {
  if (a.empty()) return "0";
  std::string out;
  for (int k = degree(a); k >= 0; --k) {
    const Rational& c = a[k];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    bool unit = mag == 1;
    if (k == 0 || !unit) out += mag.get_str();
    if (k > 0) {
      if (!unit) out += "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace qp

namespace zp {

void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

Integer content(const ZPoly& p) {
  Integer g = 0;
  for (const auto& c : p) g = gcd(g, c);
  return g == 0 ? Integer(1) : g;
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

bool divides(const ZPoly& b, const ZPoly& a, ZPoly* quotient) {
  ZPoly r(a);
  trim(r);
  int db = degree(b);
  if (db < 0) return false;
  if (degree(r) < db) {
    if (quotient) quotient->clear();
    return r.empty();
  }
  ZPoly q(r.size() - b.size() + 1);
  for (int k = degree(r); k >= db; --k) {
    if (r[k] == 0) continue;
    if (!mpz_divisible_p(r[k].get_mpz_t(), b.back().get_mpz_t())) return false;
    Integer c = r[k] / b.back();
    q[k - db] = c;
    for (int j = 0; j <= db; ++j) r[k - db + j] -= c * b[j];
  }
  trim(r);
  if (!r.empty()) return false;
  trim(q);
  if (quotient) *quotient = std::move(q);
  return true;
}

}  // namespace zp

}  // namespace jaclab
