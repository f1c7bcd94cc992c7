#include "jaclab/algebra/bipoly.hpp"

#include "jaclab/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace jaclab {

namespace {

// Evaluation points 0, 1, -1, 2, -2, ...
long point(int k) { return k % 2 ? (k + 1) / 2 : -(k / 2); }

bool lex_less(const Exponent& a, const Exponent& b, int major) {
  int am = major == 0 ? a.first : a.second, bm = major == 0 ? b.first : b.second;
  if (am != bm) return am < bm;
  int ao = major == 0 ? a.second : a.first, bo = major == 0 ? b.second : b.first;
  return ao < bo;
}

const std::pair<const Exponent, Number>& leading_term(const BiPoly& p, int major) {
  auto it = p.terms().begin();
  for (auto jt = p.terms().begin(); jt != p.terms().end(); ++jt)
    if (lex_less(it->first, jt->first, major)) it = jt;
  return *it;
}

BiPoly normalize_lex(const BiPoly& p, int major) {
  if (p.is_zero()) return p;
  return leading_term(p, major).second.inverse() * p;
}

BiPoly content_free(const BiPoly& p, int var, UPoly* content) {
  UPoly c;
  for (const auto& k : p.coefficients(var)) c = up::gcd(c, k);
  *content = c;
  BiPoly q;
  bp::divide(p, BiPoly::from_univariate(c, 1 - var), &q);
  return q;
}

}  // namespace

BiPoly::BiPoly(const Number& c) {
  if (!c.is_zero()) t_.emplace(Exponent{0, 0}, c);
}

BiPoly BiPoly::monomial(const Number& c, int i, int j) {
  BiPoly r;
  if (!c.is_zero()) r.t_.emplace(Exponent{i, j}, c);
  return r;
}

BiPoly BiPoly::from_univariate(const UPoly& p, int index) {
  BiPoly r;
  for (int k = 0; k <= p.degree(); ++k)
    if (!p[k].is_zero()) r.t_.emplace(index == 0 ? Exponent{k, 0} : Exponent{0, k}, p[k]);
  return r;
}

BiPoly BiPoly::from_coefficients(const std::vector<UPoly>& coeffs, int index) {
  BiPoly r;
  for (int j = 0; j < static_cast<int>(coeffs.size()); ++j)
    for (int i = 0; i <= coeffs[j].degree(); ++i)
      if (!coeffs[j][i].is_zero()) r.t_.emplace(index == 1 ? Exponent{i, j} : Exponent{j, i}, coeffs[j][i]);
  return r;
}

void BiPoly::add_term(const Exponent& e, const Number& c) {
  if (c.is_zero()) return;
  auto it = t_.find(e);
  if (it == t_.end()) {
    t_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) t_.erase(it);
}

bool BiPoly::is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first == Exponent{0, 0}); }

Number BiPoly::constant_term() const { return coeff(0, 0); }

Number BiPoly::coeff(int i, int j) const {
  auto it = t_.find({i, j});
  return it == t_.end() ? Number() : it->second;
}

int BiPoly::degree() const {
  int d = -1;
  for (const auto& [e, c] : t_) d = std::max(d, e.first + e.second);
  return d;
}

int BiPoly::degree(int index) const {
  int d = -1;
  for (const auto& [e, c] : t_) d = std::max(d, index == 0 ? e.first : e.second);
  return d;
}

std::vector<UPoly> BiPoly::coefficients(int index) const {
  int d = degree(index);
  if (d < 0) return {};
  std::vector<std::vector<Number>> raw(d + 1);
  int od = std::max(degree(1 - index), 0);
  for (auto& r : raw) r.resize(od + 1);
  for (const auto& [e, c] : t_) {
    int k = index == 0 ? e.first : e.second, o = index == 0 ? e.second : e.first;
    raw[k][o] = c;
  }
  std::vector<UPoly> out;
  for (auto& r : raw) out.emplace_back(std::move(r));
  return out;
}

UPoly BiPoly::lead(int index) const {
  auto cs = coefficients(index);
  return cs.empty() ? UPoly() : cs.back();
}

BiPoly BiPoly::leading_form() const {
  BiPoly r;
  int d = degree();
  for (const auto& [e, c] : t_)
    if (e.first + e.second == d) r.t_.emplace(e, c);
  return r;
}

FieldPtr BiPoly::field() const {
  FieldPtr f;
  for (const auto& [e, c] : t_) f = common_field(f, c.field());
  return f;
}

bool BiPoly::is_rational() const {
  for (const auto& [e, c] : t_)
    if (!c.is_rational()) return false;
  return true;
}

BiPoly BiPoly::lift(const FieldPtr& f) const {
  BiPoly r;
  for (const auto& [e, c] : t_) r.t_.emplace(e, c.lift(f));
  return r;
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& [e, c] : r.t_) c = -c;
  return r;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
  BiPoly r = a;
  for (const auto& [e, c] : b.t_) r.add_term(e, c);
  return r;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) {
  BiPoly r = a;
  for (const auto& [e, c] : b.t_) r.add_term(e, -c);
  return r;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  for (const auto& [ea, ca] : a.t_)
    for (const auto& [eb, cb] : b.t_) r.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
  return r;
}

BiPoly operator*(const Number& c, const BiPoly& a) {
  BiPoly r;
  if (c.is_zero()) return r;
  for (const auto& [e, x] : a.t_) r.t_.emplace(e, c * x);
  return r;
}

bool operator==(const BiPoly& a, const BiPoly& b) {
  if (a.t_.size() != b.t_.size()) return false;
  for (auto ia = a.t_.begin(), ib = b.t_.begin(); ia != a.t_.end(); ++ia, ++ib)
    if (ia->first != ib->first || ia->second != ib->second) return false;
  return true;
}

BiPoly BiPoly::derivative(int index) const {
  BiPoly r;
  for (const auto& [e, c] : t_) {
    int k = index == 0 ? e.first : e.second;
    if (k == 0) continue;
    Exponent d = index == 0 ? Exponent{e.first - 1, e.second} : Exponent{e.first, e.second - 1};
    r.add_term(d, Number(static_cast<long>(k)) * c);
  }
  return r;
}

Number BiPoly::eval(const Number& a, const Number& b) const { return specialize(0, a).eval(b); }

UPoly BiPoly::specialize(int index, const Number& value) const {
  int od = degree(1 - index);
  if (od < 0) return {};
  std::vector<Number> out(od + 1);
  int vd = std::max(degree(index), 0);
  std::vector<Number> pw(vd + 1);
  pw[0] = Number(1);
  for (int k = 1; k <= vd; ++k) pw[k] = pw[k - 1] * value;
  for (const auto& [e, c] : t_) {
    int k = index == 0 ? e.first : e.second, o = index == 0 ? e.second : e.first;
    out[o] += c * pw[k];
  }
  return UPoly(std::move(out));
}

BiPoly BiPoly::compose(const BiPoly& first, const BiPoly& second) const {
  std::vector<BiPoly> pf{BiPoly(1)}, ps{BiPoly(1)};
  for (int k = 1; k <= degree(0); ++k) pf.push_back(pf.back() * first);
  for (int k = 1; k <= degree(1); ++k) ps.push_back(ps.back() * second);
  BiPoly r;
  for (const auto& [e, c] : t_) r += c * (pf[e.first] * ps[e.second]);
  return r;
}

BiPoly BiPoly::swapped() const {
  BiPoly r;
  for (const auto& [e, c] : t_) r.t_.emplace(Exponent{e.second, e.first}, c);
  return r;
}

std::string BiPoly::render(const std::string& first, const std::string& second) const {
  if (t_.empty()) return "0";
  std::vector<std::pair<Exponent, Number>> ts(t_.begin(), t_.end());
  std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) { return lex_less(b.first, a.first, 1); });
  std::string out;
  for (const auto& [e, c] : ts) {
    bool mono = e.first > 0 || e.second > 0;
    std::string coef;
    bool negative = false;
    if (c.is_rational()) {
      Rational r = c.to_rational();
      negative = r < 0;
      if (negative) r = -r;
      if (!(mono && r == 1)) coef = to_string(r);
    } else {
      coef = c.render();
    }
    if (out.empty())
      out = negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    std::string m;
    auto pw = [](const std::string& v, int k) { return k == 1 ? v : v + "^" + std::to_string(k); };
    if (e.first > 0) m = pw(first, e.first);
    if (e.second > 0) m += (m.empty() ? "" : "*") + pw(second, e.second);
    out += coef;
    if (!coef.empty() && !m.empty()) out += "*";
    out += m;
  }
  return out;
}

BiPoly pow(const BiPoly& a, unsigned e) {
  BiPoly r(1), base = a;
  while (e) {
    if (e & 1u) r = r * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return r;
}

namespace bp {

UPoly resultant(const BiPoly& p, const BiPoly& q, int var) {
  if (p.is_zero() && q.is_zero()) throw std::invalid_argument("resultant of two zero polynomials");
  if (p.is_zero() || q.is_zero()) return {};
  int other = 1 - var;
  int dp = p.degree(var), dq = q.degree(var);
  if (dp == 0) return up::pow(p.specialize(var, Number(0)), dq);
  if (dq == 0) return up::pow(q.specialize(var, Number(0)), dp);
  UPoly lp = p.lead(var), lq = q.lead(var);
  int bound = dp * std::max(q.degree(other), 0) + dq * std::max(p.degree(other), 0);
  std::vector<Number> xs, ys;
  for (int k = 0; static_cast<int>(xs.size()) <= bound; ++k) {
    Number x0(point(k));
    if (lp.eval(x0).is_zero() || lq.eval(x0).is_zero()) continue;
    xs.push_back(x0);
    ys.push_back(up::resultant(p.specialize(other, x0), q.specialize(other, x0)));
  }
  return up::interpolate(xs, ys);
}

bool divide(const BiPoly& a, const BiPoly& b, BiPoly* quotient) {
  if (b.is_zero()) throw std::domain_error("bivariate division by zero");
  BiPoly r = a, q;
  const auto& [eb, cb] = leading_term(b, 1);
  Number inv = cb.inverse();
  while (!r.is_zero()) {
    auto [er, cr] = leading_term(r, 1);
    if (er.first < eb.first || er.second < eb.second) return false;
    BiPoly m = BiPoly::monomial(cr * inv, er.first - eb.first, er.second - eb.second);
    q += m;
    r = r - m * b;
  }
  if (quotient) *quotient = std::move(q);
  return true;
}

BiPoly gcd(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero()) return normalize_lex(b, 1);
  if (b.is_zero()) return normalize_lex(a, 1);
  UPoly ca, cb;
  BiPoly pa = content_free(a, 1, &ca), pb = content_free(b, 1, &cb);
  BiPoly c = BiPoly::from_univariate(up::gcd(ca, cb), 0);
  if (pa.degree(1) == 0 || pb.degree(1) == 0) return normalize_lex(c, 1);
  UPoly la = pa.lead(1), lb = pb.lead(1);
  UPoly l = up::gcd(la, lb);
  int bound = std::min(pa.degree(0), pb.degree(0)) + std::max(l.degree(), 0);
  std::vector<Number> xs;
  std::vector<UPoly> images;
  int min_deg = std::min(pa.degree(1), pb.degree(1)) + 1;
  for (int k = 0; k < 4 * (bound + 8) + 64; ++k) {
    Number x0(point(k));
    if (la.eval(x0).is_zero() || lb.eval(x0).is_zero()) continue;
    UPoly g0 = up::gcd(pa.specialize(0, x0), pb.specialize(0, x0));
    if (g0.degree() == 0) return normalize_lex(c, 1);
    if (g0.degree() > min_deg) continue;
    if (g0.degree() < min_deg) {
      min_deg = g0.degree();
      xs.clear();
      images.clear();
    }
    xs.push_back(x0);
    images.push_back(l.eval(x0) * g0);
    if (static_cast<int>(xs.size()) < bound + 1) continue;
    std::vector<UPoly> coeffs;
    for (int j = 0; j <= min_deg; ++j) {
      std::vector<Number> vals;
      for (const auto& im : images) vals.push_back(im.coeff(j));
      coeffs.push_back(up::interpolate(xs, vals));
    }
    UPoly cg;
    BiPoly g = content_free(BiPoly::from_coefficients(coeffs, 1), 1, &cg);
    if (divide(pa, g, nullptr) && divide(pb, g, nullptr)) return normalize_lex(c * g, 1);
  }
  throw std::logic_error("bivariate gcd interpolation did not stabilize");
}

BiPoly squarefree_part(const BiPoly& p, int var) {
  if (p.is_zero()) throw std::invalid_argument("squarefree part of the zero polynomial");
  UPoly cont;
  BiPoly pp = content_free(p, var, &cont);
  BiPoly sp(1);
  if (pp.degree(var) > 0) {
    BiPoly g = gcd(pp, pp.derivative(var));
    divide(pp, g, &sp);
  }
  BiPoly r = BiPoly::from_univariate(up::squarefree_part(cont), 1 - var) * sp;
  return normalize_lex(r, var);
}

BiPoly squarefree_part(const BiPoly& p) { return squarefree_part(p, 1); }

BiPoly integer_normalize(const BiPoly& p) {
  if (p.is_zero()) return p;
  if (!p.is_rational()) return normalize_lex(p, 1);
  Integer den = 1, num = 0;
  for (const auto& [e, c] : p.terms()) {
    Rational r = c.to_rational();
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), r.get_den_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), r.get_num_mpz_t());
  }
  Rational s(den, num);
  s.canonicalize();
  if (leading_term(p, 1).second.to_rational() < 0) s = -s;
  return Number(s) * p;
}

BiPoly monic_normalize_lex(const BiPoly& p) { return normalize_lex(p, 1); }

BiPoly interpolate2d(const std::vector<Number>& xs, const std::vector<Number>& ys,
                     const std::vector<std::vector<Number>>& values) {
  std::vector<UPoly> rows;
  int dy = -1;
  for (const auto& row : values) {
    rows.push_back(up::interpolate(ys, row));
    dy = std::max(dy, rows.back().degree());
  }
  std::vector<UPoly> coeffs;
  for (int j = 0; j <= dy; ++j) {
    std::vector<Number> vals;
    for (const auto& r : rows) vals.push_back(r.coeff(j));
    coeffs.push_back(up::interpolate(xs, vals));
  }
  return BiPoly::from_coefficients(coeffs, 1);
}

}  // namespace bp

LinearChange LinearChange::inverse() const {
  Rational det = determinant();
  if (det == 0) throw std::logic_error("singular linear change");
  return {{m[3] / det, -m[1] / det, -m[2] / det, m[0] / det}};
}

bool LinearChange::is_identity() const { return m[0] == 1 && m[1] == 0 && m[2] == 0 && m[3] == 1; }

BiPoly LinearChange::apply(const BiPoly& p) const {
  if (is_identity()) return p;
  BiPoly x = BiPoly::var(0), y = BiPoly::var(1);
  BiPoly fx = Number(m[0]) * x + Number(m[1]) * y;
  BiPoly fy = Number(m[2]) * x + Number(m[3]) * y;
  return p.compose(fx, fy);
}

std::string LinearChange::describe(const std::string& first, const std::string& second) const {
  auto form = [&](const Rational& a, const Rational& b) {
    std::string out;
    auto add = [&](const Rational& c, const std::string& v) {
      if (c == 0) return;
      Rational r = c < 0 ? Rational(-c) : c;
      if (out.empty())
        out = c < 0 ? "-" : "";
      else
        out += c < 0 ? " - " : " + ";
      if (r != 1) out += to_string(r) + "*";
      out += v;
    };
    add(a, first);
    add(b, second);
    return out.empty() ? std::string("0") : out;
  };
  return first + " -> " + form(m[0], m[1]) + ", " + second + " -> " + form(m[2], m[3]);
}

bool is_monic_in_second(const BiPoly& p) {
  return !p.is_zero() && p.degree(1) == p.degree() && p.lead(1).degree() == 0;
}

Normalization monic_normalize(const std::vector<BiPoly>& polys) {
  int total = 0;
  for (const auto& p : polys) {
    if (p.is_constant()) throw DegenerateInput("normalization needs non-constant polynomials");
    total += p.degree();
  }
  for (int k = 0; std::abs(point(k)) <= total + 1; ++k) {
    LinearChange ch = LinearChange::shear(point(k));
    Normalization out;
    out.change = ch;
    bool ok = true;
    for (const auto& p : polys) {
      BiPoly q = ch.apply(p);
      if (!is_monic_in_second(q)) {
        ok = false;
        break;
      }
      Number lc = q.lead(1)[0];
      out.scales.push_back(lc);
      out.polys.push_back(lc.inverse() * q);
    }
    if (ok) return out;
  }
  throw ResourceLimit("configuration error: no admissible shear within the search bound");
}

Normalization y_normalize(const std::vector<BiPoly>& polys) {
  Normalization out;
  for (const auto& p : polys) {
    if (p.degree(1) < 1 || !p.lead(1).is_constant()) return monic_normalize(polys);
    Number lc = p.lead(1)[0];
    out.scales.push_back(lc);
    out.polys.push_back(lc.inverse() * p);
  }
  return out;
}

}  // namespace jaclab
