#include "jaclab/algebra/upoly.hpp"

#include "jaclab/algebra/factor_q.hpp"
#include "jaclab/errors.hpp"

#include <stdexcept>

namespace jaclab {

namespace {

Rational qp_resultant(QPoly a, QPoly b) {
  qp::trim(a);
  qp::trim(b);
  if (a.empty() || b.empty()) return 0;
  Rational acc = 1;
  for (;;) {
    int da = qp::degree(a), db = qp::degree(b);
    if (db == 0) {
      Rational r = 1;
      for (int i = 0; i < da; ++i) r *= b[0];
      return acc * r;
    }
    if (da == 0) {
      Rational r = 1;
      for (int i = 0; i < db; ++i) r *= a[0];
      return acc * r;
    }
    QPoly r = qp::rem(a, b);
    if (r.empty()) return 0;
    int dr = qp::degree(r);
    if ((da % 2) && (db % 2)) acc = -acc;
    for (int i = 0; i < da - dr; ++i) acc *= b.back();
    a = std::move(b);
    b = std::move(r);
  }
}

// Norm from Q(theta) down to Q, theta with minimal polynomial m.
Rational norm_of(const Number& a, const QPoly& m) {
  if (a.is_zero()) return 0;
  return qp_resultant(m, a.repr());
}

}  // namespace

UPoly::UPoly(std::vector<Number> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly::UPoly(const Number& c) {
  if (!c.is_zero()) c_.push_back(c);
}

UPoly UPoly::from_rational(const QPoly& p) {
  std::vector<Number> c(p.begin(), p.end());
  return UPoly(std::move(c));
}

UPoly UPoly::monomial(const Number& c, int k) {
  if (c.is_zero()) return {};
  std::vector<Number> v(k + 1);
  v[k] = c;
  return UPoly(std::move(v));
}

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Number& UPoly::lead() const {
  static const Number zero;
  return c_.empty() ? zero : c_.back();
}

const Number& UPoly::operator[](std::size_t i) const { return c_.at(i); }

bool UPoly::is_rational() const {
  for (const auto& c : c_)
    if (!c.is_rational()) return false;
  return true;
}

QPoly UPoly::to_rational() const {
  QPoly r;
  for (const auto& c : c_) r.push_back(c.to_rational());
  return r;
}

FieldPtr UPoly::field() const {
  FieldPtr f;
  for (const auto& c : c_) f = common_field(f, c.field());
  return f;
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Number> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
  return UPoly(std::move(r));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  std::vector<Number> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
  return UPoly(std::move(r));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Number> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(r));
}

UPoly operator*(const Number& c, const UPoly& a) {
  if (c.is_zero()) return {};
  std::vector<Number> r(a.c_);
  for (auto& x : r) x = c * x;
  return UPoly(std::move(r));
}

bool operator==(const UPoly& a, const UPoly& b) {
  if (a.c_.size() != b.c_.size()) return false;
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    if (a.c_[i] != b.c_[i]) return false;
  return true;
}

Number UPoly::eval(const Number& x) const {
  Number r;
  for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
  return r;
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Number> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = Number(static_cast<long>(i)) * c_[i];
  return UPoly(std::move(r));
}

UPoly UPoly::monic() const {
  if (is_zero()) return {};
  return lead().inverse() * *this;
}

UPoly UPoly::compose(const UPoly& q) const {
  UPoly r;
  for (std::size_t i = c_.size(); i-- > 0;) r = r * q + UPoly(c_[i]);
  return r;
}

UPoly UPoly::lift(const FieldPtr& f) const {
  std::vector<Number> r;
  r.reserve(c_.size());
  for (const auto& c : c_) r.push_back(c.lift(f));
  return UPoly(std::move(r));
}

std::string UPoly::render(const std::string& var) const {
  if (is_zero()) return "0";
  if (is_rational()) return qp::render(to_rational(), var);
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Number& c = c_[k];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    bool one = c == Number(1);
    if (k == 0 || !one) out += c.render();
    if (k > 0) {
      if (!one) out += "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

namespace up {

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  int db = b.degree();
  if (a.degree() < db) return {{}, a};
  std::vector<Number> r(a.coeffs());
  std::vector<Number> q(r.size() - b.coeffs().size() + 1);
  Number inv = b.lead().inverse();
  for (int k = a.degree(); k >= db; --k) {
    if (r[k].is_zero()) continue;
    Number c = r[k] * inv;
    q[k - db] = c;
    for (int j = 0; j <= db; ++j) r[k - db + j] -= c * b[j];
  }
  r.resize(db);
  return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UPoly pow(const UPoly& a, unsigned e) {
  UPoly r(Number(1)), base = a;
  while (e) {
    if (e & 1u) r = r * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return r;
}

Number resultant(const UPoly& a0, const UPoly& b0) {
  UPoly a = a0, b = b0;
  if (a.is_zero() || b.is_zero()) return Number();
  Number acc(1);
  for (;;) {
    int da = a.degree(), db = b.degree();
    if (db == 0) {
      Number r(1);
      for (int i = 0; i < da; ++i) r *= b[0];
      return acc * r;
    }
    if (da == 0) {
      Number r(1);
      for (int i = 0; i < db; ++i) r *= a[0];
      return acc * r;
    }
    UPoly r = divmod(a, b).second;
    if (r.is_zero()) return Number();
    int dr = r.degree();
    if ((da % 2) && (db % 2)) acc = -acc;
    for (int i = 0; i < da - dr; ++i) acc *= b.lead();
    a = std::move(b);
    b = std::move(r);
  }
}

UPoly squarefree_part(const UPoly& a) {
  if (a.degree() <= 0) return a.monic();
  return divmod(a, gcd(a, a.derivative())).first.monic();
}

bool is_squarefree(const UPoly& a) { return gcd(a, a.derivative()).degree() <= 0; }

int multiplicity(const UPoly& factor, const UPoly& a) {
  if (factor.degree() < 1) throw std::invalid_argument("multiplicity of a constant factor");
  int m = 0;
  UPoly r = a;
  while (!r.is_zero()) {
    auto [q, rem] = divmod(r, factor);
    if (!rem.is_zero()) break;
    r = std::move(q);
    ++m;
  }
  return m;
}

UPoly interpolate(const std::vector<Number>& xs, const std::vector<Number>& ys) {
  // Newton divided differences
  std::size_t n = xs.size();
  std::vector<Number> dd(ys);
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  UPoly r;
  for (std::size_t k = n; k-- > 0;) {
    r = r * UPoly(std::vector<Number>{-xs[k], Number(1)}) + UPoly(dd[k]);
  }
  return r;
}

namespace {

QPoly norm_over_impl(const UPoly& a, const FieldPtr& f) {
  if (!f) return a.to_rational();
  int n = f->degree();
  int d = a.degree() * n;
  std::vector<Number> xs, ys;
  for (int i = 0; i <= d; ++i) {
    Number z(static_cast<long>(i));
    xs.push_back(z);
    ys.push_back(norm_of(a.eval(z).lift(f), f->minpoly()));
  }
  return interpolate(xs, ys).to_rational();
}

}  // namespace

QPoly norm_over(const UPoly& a, const FieldPtr& field) { return norm_over_impl(a, field); }

QPoly norm(const UPoly& a) { return norm_over_impl(a, a.field()); }

namespace {

// Yun's squarefree decomposition over the coefficient field.
std::vector<Factor> squarefree_decompose(const UPoly& p) {
  std::vector<Factor> out;
  if (p.degree() <= 0) return out;
  UPoly a = p.monic();
  UPoly b = a.derivative();
  UPoly c = gcd(a, b);
  UPoly w = divmod(a, c).first;
  UPoly y = divmod(b, c).first;
  UPoly z = y - w.derivative();
  for (int i = 1; w.degree() > 0; ++i) {
    UPoly g = gcd(w, z);
    if (g.degree() > 0) out.push_back({g, i});
    w = divmod(w, g).first;
    y = divmod(z, g).first;
    z = y - w.derivative();
  }
  return out;
}

UPoly shift(const UPoly& p, const Number& s) { return p.compose(UPoly(std::vector<Number>{s, Number(1)})); }

}  // namespace

std::vector<Factor> factor_over(const UPoly& a, const FieldPtr& field) {
  if (a.is_zero()) throw std::domain_error("cannot factor the zero polynomial");
  std::vector<Factor> out;
  if (!field) {
    for (const auto& f : factor_rational(a.to_rational())) out.push_back({UPoly::from_rational(f.factor), f.multiplicity});
    return out;
  }
  Number theta = Number::generator(field);
  for (const auto& [g, mult] : squarefree_decompose(a.lift(field))) {
    if (g.degree() == 1) {
      out.push_back({g, mult});
      continue;
    }
    for (long s = 0;; s = s > 0 ? -s : 1 - s) {
      if (s > 64) throw ResourceLimit("no separating shift found in algebraic factorization");
      Number shiftv = Number(s) * theta;
      UPoly gs = shift(g, -shiftv);  // g(z - s*theta)
      QPoly N = norm_over_impl(gs, field);
      if (!qp::is_squarefree(N)) continue;
      for (const auto& nf : factor_rational(N)) {
        UPoly h = gcd(gs, UPoly::from_rational(nf.factor));
        if (h.degree() < 1) continue;
        out.push_back({shift(h, shiftv).monic(), mult});  // h(z + s*theta)
      }
      break;
    }
  }
  return out;
}

std::vector<Factor> factor(const UPoly& a) { return factor_over(a, a.field()); }

}  // namespace up

FieldPtr extend_field(const FieldPtr& base, const UPoly& g_in, int depth_limit) {
  if (g_in.degree() < 2) throw std::invalid_argument("extension requires an irreducible factor of degree >= 2");
  int depth = (base ? base->depth() : 0) + 1;
  if (depth > depth_limit)
    throw ResourceLimit("tower too deep: extension would need " + std::to_string(depth) + " levels (limit " +
                        std::to_string(depth_limit) + ")");
  UPoly g = base ? g_in.lift(base).monic() : g_in.monic();
  Field::Level level;
  level.parent = base;
  level.name = "a" + std::to_string(depth);
  for (const auto& c : g.coeffs()) level.defining.push_back(c.repr());

  if (!base) {
    level.minpoly = g.to_rational();
    level.adjoined = QPoly{0, 1};
    auto roots = approximate_roots(level.minpoly);
    level.generator_value = roots.front();
    return std::make_shared<const Field>(std::move(level));
  }

  Number theta = Number::generator(base);
  for (long s = 1;; s = s > 0 ? -s : 1 - s) {
    if (s > 64) throw ResourceLimit("no primitive element found for field extension");
    UPoly gs = g.compose(UPoly(std::vector<Number>{-Number(s) * theta, Number(1)}));  // g(z - s*theta)
    QPoly N = up::norm(gs);
    if (!qp::is_squarefree(N)) continue;

    // provisional field Q(gamma), gamma = beta + s*theta
    Field::Level prov;
    prov.name = level.name;
    prov.minpoly = qp::monic(N);
    prov.adjoined = QPoly{0, 1};
    auto gamma_roots = approximate_roots(prov.minpoly);
    prov.generator_value = gamma_roots.front();
    auto L0 = std::make_shared<const Field>(prov);
    Number gamma = Number::generator(L0);

    // theta is the unique common root of M_base(T) and g(gamma - s*T; T)
    UPoly T = UPoly::x();
    UPoly lin = UPoly(std::vector<Number>{gamma, Number(-s)});  // gamma - s*T
    UPoly B;
    UPoly lin_pow(Number(1));
    for (int i = 0; i <= g.degree(); ++i) {
      B = B + UPoly::from_rational(g[i].lift(base).repr()) * lin_pow;
      lin_pow = lin_pow * lin;
    }
    UPoly h = up::gcd(UPoly::from_rational(base->minpoly()), B);
    if (h.degree() != 1) continue;
    Number tau = -h[0];
    Number beta = gamma - Number(s) * tau;

    level.minpoly = prov.minpoly;
    level.parent_generator = tau.repr();
    level.adjoined = beta.repr();

    // embedding: a root of g under the parent's embedding, then the matching root of N
    std::vector<Complex> gc;
    for (const auto& c : g.coeffs()) gc.push_back(c.approx());
    auto beta_roots = approximate_roots(gc);
    Complex gamma0 = beta_roots.front() + Complex(static_cast<long double>(s)) * base->generator_value();
    level.generator_value = gamma_roots[nearest_root(gamma_roots, gamma0)];
    return std::make_shared<const Field>(std::move(level));
  }
}

}  // namespace jaclab
