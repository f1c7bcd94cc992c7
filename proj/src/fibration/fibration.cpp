#include "jaclab/fibration/fibration.hpp"

#include "jaclab/algebra/factor_q.hpp"
#include "jaclab/errors.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace jaclab {

namespace {

long shear_point(int k) { return k == 0 ? 0 : (k % 2 ? (k + 1) / 2 : -(k / 2)); }

struct Monic {
  BiPoly h;        // change(h_original) / scale, monic in y
  Rational scale;
  LinearChange change;
};

Monic y_monic(const BiPoly& h) {
  Normalization n = y_normalize({h});
  return {n.polys[0], n.scales[0].to_rational(), n.change};
}

Value scaled(const Value& v, const Rational& s) {
  if (s == 1) return v;
  if (v.is_rational()) return Value(v.rational() * s);
  return Value::from_number(Number(s) * v.number());
}

struct FiberCore {
  int chi = 0;
  bool reduced = true;
  std::vector<SingularPoint> points;
};

// Riemann-Hurwitz for the y-projection of a reduced curve r = 0 with constant y-leading coefficient.
int direct_euler(const BiPoly& r, const FieldPtr& field) {
  int d = r.degree(1);
  UPoly disc = bp::resultant(r, r.derivative(1), 1);
  if (disc.is_zero()) throw DegenerateInput("fiber discriminant vanishes identically");
  int drop = 0;
  for (const auto& f : up::factor_over(disc, field)) {
    if (f.factor.degree() < 1) continue;
    Number x0;
    if (f.factor.degree() == 1) {
      x0 = -f.factor[0];
    } else {
      FieldPtr ext = extend_field(field, f.factor, (field ? field->depth() : 0) + 1);
      x0 = Number(ext, ext->adjoined());
    }
    UPoly fiber = r.specialize(0, x0);
    drop += (d - up::squarefree_part(fiber).degree()) * f.factor.degree();
  }
  return d - drop;
}

using ClassCache = std::optional<std::vector<CriticalPointClass>>;

FiberCore fiber_core(const Monic& m, ClassCache& classes, const Value& c) {
  Value cn = scaled(c, Rational(1) / m.scale);
  FieldPtr kc = cn.is_rational() ? nullptr : cn.field("c");
  Number cnum = cn.is_rational() ? Number(cn.rational()) : cn.number("c");
  BiPoly f = m.h - BiPoly(cnum);
  FiberCore out;
  BiPoly r = bp::squarefree_part(f, 1);
  if (r.degree(1) < f.degree(1)) {
    out.reduced = false;
    out.chi = direct_euler(r, kc);
    return out;
  }
  UPoly disc = bp::resultant(f, f.derivative(1), 1);
  if (disc.is_zero()) throw DegenerateInput("fiber discriminant vanishes identically");
  out.chi = f.degree(1) - disc.degree();
  const auto& L = m.change.m;
  if (!classes) classes = critical_points(m.h);
  for (const auto& cls : *classes) {
    if (minimal_polynomial(cls.value) != cn.minpoly()) continue;
    Number X = Number(L[0]) * cls.x + Number(L[1]) * cls.y;
    Number Y = Number(L[2]) * cls.x + Number(L[3]) * cls.y;
    for (const auto& row : conjugate_values({cls.value, X, Y}, cls.field)) {
      if (row[0] != cn) continue;
      out.points.push_back({row[1], row[2], cls.mu});
      out.chi += cls.mu;
    }
  }
  return out;
}

int generic_chi(const Monic& m, ClassCache& classes, const std::vector<Value>& avoid,
                std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-60, 60), den(1, 7);
  std::vector<Value> picked;
  while (picked.size() < 2) {
    Rational c(num(rng), den(rng));
    c.canonicalize();
    Value v(c);
    if (contains(avoid, v) || contains(picked, v)) continue;
    picked.push_back(v);
  }
  int a = fiber_core(m, classes, picked[0]).chi;
  int b = fiber_core(m, classes, picked[1]).chi;
  if (a != b)
    throw CorrectnessAlarm("generic Euler characteristic differs between samples " + picked[0].describe() + " (" +
                           std::to_string(a) + ") and " + picked[1].describe() + " (" + std::to_string(b) + ")");
  return a;
}

// y-division by a polynomial with leading y-coefficient 1.
std::pair<BiPoly, BiPoly> divmod_y(BiPoly a, const BiPoly& g) {
  int s = g.degree(1);
  BiPoly q;
  while (!a.is_zero() && a.degree(1) >= s) {
    int k = a.degree(1);
    BiPoly term = BiPoly::from_univariate(a.lead(1), 0) * BiPoly::monomial(Number(1), 0, k - s);
    q += term;
    a = a - term * g;
  }
  return {q, a};
}

BiPoly truncate_second(const BiPoly& p, int max_degree) {
  BiPoly out;
  for (const auto& [e, c] : p.terms())
    if (e.second <= max_degree) out += BiPoly::monomial(c, e.first, e.second);
  return out;
}

// h monic in y of degree d = total degree. Looks for h = u(g) with deg u = r >= 2.
std::optional<std::pair<BiPoly, QPoly>> decompose(const BiPoly& h) {
  int d = h.degree(1);
  auto coeffs = h.coefficients(1);
  // h = y^d (1 + w), w in z = 1/y
  BiPoly w;
  for (int j = 0; j < d; ++j)
    if (!coeffs[j].is_zero()) w += BiPoly::from_univariate(coeffs[j], 0) * BiPoly::monomial(Number(1), 0, d - j);
  for (int r = 2; r <= d; ++r) {
    if (d % r) continue;
    int s = d / r;
    BiPoly root(1), wk(1);
    Rational binom = 1;
    for (int k = 1; k <= s; ++k) {
      binom *= (Rational(1, r) - (k - 1)) / Rational(k);
      wk = truncate_second(wk * w, s);
      root += Number(binom) * wk;
    }
    BiPoly g;
    root = truncate_second(root, s);
    for (const auto& [e, c] : root.terms()) g += BiPoly::monomial(c, e.first, s - e.second);
    QPoly u;
    BiPoly rest = h;
    bool ok = true;
    while (!rest.is_zero()) {
      auto [q, rem] = divmod_y(rest, g);
      if (!rem.is_constant() || !rem.constant_term().is_rational()) {
        ok = false;
        break;
      }
      u.push_back(rem.constant_term().to_rational());
      rest = q;
    }
    if (ok && qp::degree(u) == r) return std::make_pair(g, u);
  }
  return std::nullopt;
}

std::vector<Value> values_of(const std::vector<CriticalPointClass>& classes, const Rational& s, QPoly* eliminant) {
  std::vector<Value> out;
  std::set<QPoly> seen;
  for (const auto& cls : classes) {
    QPoly mp = minimal_polynomial(Number(s) * cls.value);
    if (!seen.insert(mp).second) continue;
    if (eliminant) *eliminant = eliminant->empty() ? mp : qp::mul(*eliminant, mp);
    out = merge_values(out, Value::roots_of(mp));
  }
  if (eliminant && eliminant->empty()) *eliminant = QPoly{1};
  return out;
}

}  // namespace

std::vector<CriticalPointClass> critical_points(const BiPoly& h) {
  if (h.is_constant()) throw DegenerateInput("constant polynomial");
  if (!h.is_rational()) throw std::invalid_argument("critical points need rational coefficients");
  BiPoly hx = h.derivative(0), hy = h.derivative(1);
  if (hx.is_zero() || hy.is_zero()) {
    const BiPoly& other = hx.is_zero() ? hy : hx;
    if (other.is_constant()) return {};
    throw DegenerateInput("non-isolated critical locus");
  }
  if (hx.is_constant() || hy.is_constant()) return {};
  if (!bp::gcd(hx, hy).is_constant()) throw DegenerateInput("non-isolated critical locus");
  for (int k = 0; k < 64; ++k) {
    long t = shear_point(k);
    LinearChange change{{1, -t, 0, 1}};
    BiPoly a = change.apply(hx), b = change.apply(hy);
    if (!a.lead(1).is_constant() && !b.lead(1).is_constant()) continue;
    QPoly res = bp::resultant(a, b, 1).to_rational();
    std::vector<CriticalPointClass> out;
    bool separated = true;
    for (const auto& sq : squarefree_decomposition(res)) {
      for (const auto& f : factor_rational(sq.factor)) {
        CriticalPointClass cls;
        Number u0;
        if (qp::degree(f.factor) == 1) {
          u0 = Number(-f.factor[0]);
        } else {
          cls.field = extend_field(nullptr, UPoly::from_rational(f.factor), 1);
          u0 = Number(cls.field, cls.field->adjoined());
        }
        UPoly g = up::squarefree_part(up::gcd(a.specialize(0, u0), b.specialize(0, u0))).monic();
        if (g.degree() != 1) {
          separated = false;
          break;
        }
        cls.y = -g[0];
        cls.x = u0 - Number(Rational(t)) * cls.y;
        cls.value = h.eval(cls.x, cls.y);
        cls.mu = sq.multiplicity;
        cls.size = qp::degree(f.factor);
        out.push_back(std::move(cls));
      }
      if (!separated) break;
    }
    if (separated) return out;
  }
  throw ResourceLimit("no shear separates the critical points");
}

CriticalValues critical_values(const BiPoly& h) {
  CriticalValues out;
  out.values = values_of(critical_points(h), 1, &out.eliminant);
  return out;
}

std::vector<TypeCriticalValue> type_critical_values(const BiPoly& h, int tower_depth) {
  Monic m = y_monic(h);
  auto types = puiseux_types(m.h, tower_depth);
  std::vector<TypeCriticalValue> out;
  for (std::size_t i = 0; i < types.size(); ++i) {
    const UPoly& hphi = types[i].h_leading;
    UPoly dh = hphi.derivative();
    if (dh.degree() < 1) continue;
    FieldPtr base = hphi.field();
    for (const auto& f : up::factor_over(dh, base)) {
      Number xi;
      if (f.factor.degree() == 1) {
        xi = -f.factor[0];
      } else {
        FieldPtr ext = extend_field(base, f.factor, tower_depth + 1);
        xi = Number(ext, ext->adjoined());
      }
      QPoly mp = minimal_polynomial(Number(m.scale) * hphi.eval(xi));
      for (const auto& v : Value::roots_of(mp)) {
        bool dup = std::any_of(out.begin(), out.end(), [&](const TypeCriticalValue& t) { return t.value == v; });
        if (!dup) out.push_back({v, static_cast<int>(i)});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.value < b.value; });
  return out;
}

ExceptionalSetReport exceptional_set_poly(const BiPoly& h, int tower_depth, std::uint64_t seed) {
  ExceptionalSetReport out;
  PrimitivityReport prim = primitivity_check(h, seed);
  if (prim.verdict != Primitivity::primitive)
    out.warnings.push_back("primitivity " + to_string(prim.verdict) + ": " + prim.detail);
  out.critical_values = critical_values(h).values;
  out.type_critical_values = type_critical_values(h, tower_depth);
  out.normalization = y_monic(h).change;
  out.union_set = out.critical_values;
  for (const auto& t : out.type_critical_values) out.union_set = merge_values(out.union_set, {t.value});
  return out;
}

FiberReport fiber_euler_characteristic(const BiPoly& h, const Value& c, std::optional<int> generic) {
  Monic m = y_monic(h);
  ClassCache classes;
  if (!generic) generic = generic_euler_characteristic(h, 0);
  FiberCore core = fiber_core(m, classes, c);
  FiberReport out;
  out.c = c;
  out.chi = core.chi;
  out.singular_points = std::move(core.points);
  out.is_reduced = core.reduced;
  out.is_atypical = !core.reduced || core.chi != *generic;
  return out;
}

int generic_euler_characteristic(const BiPoly& h, std::uint64_t seed) {
  Monic m = y_monic(h);
  ClassCache classes;
  return generic_chi(m, classes, exceptional_set_poly(h, kDefaultTowerDepth, seed).union_set, seed);
}

SuzukiReport suzuki_check(const BiPoly& h, std::uint64_t seed) {
  Monic m = y_monic(h);
  ClassCache classes;
  ExceptionalSetReport ex = exceptional_set_poly(h, kDefaultTowerDepth, seed);
  std::vector<Value> candidates = merge_values(ex.union_set, ex.critical_values);
  SuzukiReport out;
  out.generic_chi = generic_chi(m, classes, candidates, seed);
  for (const auto& c : candidates) {
    FiberCore core = fiber_core(m, classes, c);
    FiberReport rep;
    rep.c = c;
    rep.chi = core.chi;
    rep.singular_points = std::move(core.points);
    rep.is_reduced = core.reduced;
    rep.is_atypical = !core.reduced || core.chi != out.generic_chi;
    out.lhs += rep.chi - out.generic_chi;
    out.candidate_values.push_back(std::move(rep));
  }
  out.rhs = 1 - out.generic_chi;
  out.holds = out.lhs == out.rhs;
  return out;
}

std::string to_string(Primitivity p) {
  switch (p) {
    case Primitivity::primitive: return "primitive";
    case Primitivity::composite_suspected: return "composite-suspected";
    default: return "inconclusive";
  }
}

PrimitivityReport primitivity_check(const BiPoly& h, std::uint64_t seed) {
  if (h.is_constant()) throw DegenerateInput("constant polynomial");
  Monic m = y_monic(h);
  PrimitivityReport out;
  if (auto dec = decompose(m.h)) {
    out.verdict = Primitivity::composite_suspected;
    out.inner = dec->first;
    out.outer = dec->second;
    out.detail = "h = u(g) with deg u = " + std::to_string(qp::degree(out.outer));
    return out;
  }
  // sampled fibers, factored over Q
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-40, 40), den(1, 5);
  int certified = 0;
  for (int sample = 0; sample < 3; ++sample) {
    Rational c(num(rng), den(rng));
    c.canonicalize();
    BiPoly fiber = h - BiPoly(Number(c));
    if (bp::irreducible_factors(fiber).size() == 1 && bp::squarefree_part(fiber).degree() == fiber.degree())
      ++certified;
  }
  if (certified == 3) {
    out.verdict = Primitivity::primitive;
    out.detail = "no decomposition h = u(g); sampled fibers irreducible";
  } else {
    out.verdict = Primitivity::inconclusive;
    out.detail = "no decomposition h = u(g), but " + std::to_string(3 - certified) +
                 " sampled fibers factor over Q";
  }
  return out;
}

}  // namespace jaclab
