#include "jaclab/puiseux/newton.hpp"

#include "jaclab/errors.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace jaclab {

namespace {

using Laurent = std::map<Rational, Number, std::greater<>>;

void add_to(Laurent& l, const Rational& e, const Number& c) {
  if (c.is_zero()) return;
  auto it = l.find(e);
  if (it == l.end()) {
    l.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) l.erase(it);
}

std::optional<Rational> top(const Laurent& l) {
  if (l.empty()) return std::nullopt;
  return l.begin()->first;
}

struct Branch {
  FieldPtr field;
  std::vector<std::pair<Rational, Number>> prefix;
  std::vector<Laurent> G;  // G[j] is the coefficient of y1^j in h(x, prefix + y1)
  int start_j = 0;
  int conj = 1;
  std::optional<Rational> level0;
  int steps = 0;
};

struct Edge {
  Rational slope;
  Rational level;
  int j_low = 0;
  std::vector<std::pair<int, Number>> points;  // (j, coefficient), descending j
  bool through_origin = false;                 // symbolic mode: ends at the (0, 0) point carrying -c
};

std::vector<Laurent> initial(const BiPoly& h) {
  std::vector<Laurent> G;
  for (const auto& cj : h.coefficients(1)) {
    Laurent l;
    for (int i = 0; i <= cj.degree(); ++i) add_to(l, Rational(i), cj[i]);
    G.push_back(std::move(l));
  }
  return G;
}

std::vector<Laurent> lift_all(const std::vector<Laurent>& G, const FieldPtr& f) {
  std::vector<Laurent> out(G.size());
  for (std::size_t j = 0; j < G.size(); ++j)
    for (const auto& [e, c] : G[j]) out[j].emplace(e, c.lift(f));
  return out;
}

// G(x, a x^e + y1)
std::vector<Laurent> shift(const std::vector<Laurent>& G, const Number& a, const Rational& e) {
  int d = static_cast<int>(G.size()) - 1;
  std::vector<Number> apow{Number(1)};
  for (int k = 1; k <= d; ++k) apow.push_back(apow.back() * a);
  std::vector<std::vector<long>> binom(d + 1, std::vector<long>(d + 1, 0));
  for (int i = 0; i <= d; ++i) {
    binom[i][0] = 1;
    for (int j = 1; j <= i; ++j) binom[i][j] = binom[i - 1][j - 1] + (j < i ? binom[i - 1][j] : 0);
  }
  std::vector<Laurent> out(G.size());
  for (int i = 0; i <= d; ++i)
    for (const auto& [alpha, c] : G[i])
      for (int j = 0; j <= i; ++j) {
        Number f = Number(binom[i][j]) * apow[i - j] * c;
        add_to(out[j], alpha + e * Rational(i - j), f);
      }
  return out;
}

std::vector<Edge> walk(const std::vector<Laurent>& G, int j0, bool symbolic, int* exact_tail) {
  std::vector<Edge> edges;
  *exact_tail = 0;
  auto t0 = top(G[j0]);
  if (!t0) throw std::logic_error("Newton walk started at an empty point");
  Rational a0 = *t0;
  auto alpha_of = [&](int j) -> std::optional<Rational> {
    auto t = top(G[j]);
    if (symbolic && j == 0 && (!t || *t < 0)) return Rational(0);
    return t;
  };
  while (j0 > 0) {
    std::optional<Rational> best;
    for (int j = 0; j < j0; ++j) {
      auto a = alpha_of(j);
      if (!a) continue;
      Rational s = (*a - a0) / Rational(j0 - j);
      if (!best || s > *best) best = s;
    }
    if (!best) {
      *exact_tail = j0;
      break;
    }
    Edge ed;
    ed.slope = *best;
    ed.level = a0 + *best * Rational(j0);
    ed.j_low = j0;
    for (int j = j0; j >= 0; --j) {
      Rational target = ed.level - *best * Rational(j);
      auto it = G[j].find(target);
      bool origin = symbolic && j == 0 && target == 0;
      if (origin) {
        ed.through_origin = true;
        ed.points.emplace_back(0, it == G[j].end() ? Number() : it->second);
        ed.j_low = 0;
      } else if (it != G[j].end()) {
        ed.points.emplace_back(j, it->second);
        ed.j_low = j;
      }
    }
    edges.push_back(ed);
    a0 = ed.level - ed.slope * Rational(ed.j_low);
    j0 = ed.j_low;
  }
  return edges;
}

struct Engine {
  bool symbolic;
  int order;
  int depth_limit;
  int step_cap;
  std::vector<Expansion> expansions;
  std::vector<NewtonPuiseuxType> types;

  void emit_expansion(const Branch& b, int mult, bool exact) {
    Expansion ex;
    ex.series = FractionalSeries::from_terms(b.prefix);
    ex.multiplicity = mult;
    ex.conjugates = b.conj;
    ex.exact = exact;
    ex.leading_level = b.level0.value_or(Rational(0));
    expansions.push_back(std::move(ex));
  }

  void emit_type(const Branch& b, const Edge& ed) {
    std::vector<Number> h(ed.points.front().first + 1);
    for (const auto& [j, c] : ed.points) h[j] = c;
    NewtonPuiseuxType t;
    t.series = FractionalSeries::from_terms(b.prefix, &ed.slope);
    t.h_leading = UPoly(std::move(h));
    t.sheet_count = sheet_count(t.series);
    t.conjugates = b.conj;
    types.push_back(std::move(t));
  }

  void process(const Branch& b) {
    if (b.steps > step_cap)
      throw ResourceLimit("truncation bound exceeded on branch with " + std::to_string(b.prefix.size()) + " terms");
    if (!symbolic && b.level0 && !b.G[0].empty() && *top(b.G[0]) <= *b.level0 - Rational(order)) {
      emit_expansion(b, b.start_j, false);
      return;
    }
    int exact_tail = 0;
    auto edges = walk(b.G, b.start_j, symbolic, &exact_tail);
    for (const auto& ed : edges) {
      if (ed.through_origin) {
        emit_type(b, ed);
        continue;
      }
      std::vector<Number> ec(ed.points.front().first - ed.j_low + 1);
      for (const auto& [j, c] : ed.points) ec[j - ed.j_low] = c;
      UPoly E(std::move(ec));
      for (const auto& f : up::factor_over(E, b.field)) {
        Branch nb;
        Number a;
        if (f.factor.degree() == 1) {
          nb.field = b.field;
          a = -f.factor[0] / f.factor[1];
        } else {
          nb.field = extend_field(b.field, f.factor, depth_limit);
          a = Number(nb.field, nb.field->adjoined());
        }
        nb.prefix = b.prefix;
        nb.prefix.emplace_back(ed.slope, a);
        nb.G = shift(nb.field == b.field ? b.G : lift_all(b.G, nb.field), a, ed.slope);
        nb.start_j = f.multiplicity;
        nb.conj = b.conj * f.factor.degree();
        nb.level0 = b.level0 ? *b.level0 : ed.level;
        nb.steps = b.steps + 1;
        auto t = top(nb.G[nb.start_j]);
        if (!t || *t != ed.level - ed.slope * Rational(nb.start_j))
          throw std::logic_error("Newton polygon bookkeeping mismatch");
        process(nb);
      }
    }
    if (exact_tail > 0) emit_expansion(b, exact_tail, true);
  }
};

Branch root_branch(const BiPoly& h) {
  if (h.degree(1) < 1 || h.lead(1).degree() != 0)
    throw DegenerateInput("polynomial must be monic in y");
  Branch b;
  b.field = h.field();
  b.G = initial(h);
  b.start_j = h.degree(1);
  return b;
}

using QL = std::map<Rational, Rational, std::greater<>>;

void add_to(QL& l, const Rational& e, const Rational& c) {
  if (c == 0) return;
  auto it = l.find(e);
  if (it == l.end()) {
    l.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second == 0) l.erase(it);
}

QL mul(const QL& a, const QL& b) {
  QL r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) add_to(r, ea + eb, ca * cb);
  return r;
}

QL plus(QL a, const QL& b) {
  for (const auto& [e, c] : b) add_to(a, e, c);
  return a;
}

QL scaled(const QL& a, const Rational& s) {
  QL r;
  if (s == 0) return r;
  for (const auto& [e, c] : a) r.emplace(e, c * s);
  return r;
}

using QLPoly = std::vector<QL>;  // polynomial in y with series coefficients

QLPoly polymul(const QLPoly& a, const QLPoly& b) {
  QLPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = plus(r[i + j], mul(a[i], b[j]));
  return r;
}

// det(y I - A) by the Faddeev-LeVerrier recursion.
QLPoly charpoly(const std::vector<std::vector<QL>>& A) {
  std::size_t n = A.size();
  QLPoly c(n + 1);
  c[n][Rational(0)] = 1;
  std::vector<std::vector<QL>> M(n, std::vector<QL>(n));
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::vector<QL>> next(n, std::vector<QL>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        QL s;
        for (std::size_t l = 0; l < n; ++l)
          if (!A[i][l].empty() && !M[l][j].empty()) s = plus(s, mul(A[i][l], M[l][j]));
        if (i == j) s = plus(s, c[n - k + 1]);
        next[i][j] = std::move(s);
      }
    M = std::move(next);
    QL tr;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l)
        if (!A[i][l].empty() && !M[l][i].empty()) tr = plus(tr, mul(A[i][l], M[l][i]));
    c[n - k] = scaled(tr, Rational(-1, static_cast<long>(k)));
  }
  return c;
}

// Norm over Q of y - u(x) for a branch with coefficients in `field`.
QLPoly branch_norm(const FractionalSeries& s, const FieldPtr& field) {
  if (!field) {
    QLPoly p(2);
    p[1][Rational(0)] = 1;
    for (const auto& t : s.terms) add_to(p[0], s.exponent(t.n), -t.a.to_rational());
    return p;
  }
  int n = field->degree();
  std::vector<std::vector<QL>> A(n, std::vector<QL>(n));
  for (const auto& t : s.terms) {
    Number a = t.a.lift(field);
    Number basis(1);
    Number theta = Number::generator(field);
    for (int col = 0; col < n; ++col) {
      Number v = (a * basis).lift(field);
      QPoly r = v.repr();
      for (int row = 0; row < n && row < static_cast<int>(r.size()); ++row) add_to(A[row][col], s.exponent(t.n), r[row]);
      basis = basis * theta;
    }
  }
  return charpoly(A);
}

}  // namespace

int default_order(const BiPoly& h) {
  int d = std::max(h.degree(), 1);
  return 2 * d * d;
}

std::vector<Expansion> expansions_at_infinity(const BiPoly& h, int order, int tower_depth) {
  if (order < 1) throw std::invalid_argument("order must be at least 1");
  if (h.degree(1) < 1) throw DegenerateInput("polynomial has no y-dependence");
  Engine eng{false, order, tower_depth, 16 * (order + h.degree() * h.degree()) + 64, {}, {}};
  eng.process(root_branch(h));
  return eng.expansions;
}

std::vector<NewtonPuiseuxType> puiseux_types(const BiPoly& h, int tower_depth) {
  if (h.degree(1) < 1) throw DegenerateInput("polynomial has no y-dependence");
  int d = h.degree();
  Engine eng{true, 0, tower_depth, 8 * d * d + 16, {}, {}};
  eng.process(root_branch(h));
  return eng.types;
}

FactorizationCheck verify_newton_factorization(const BiPoly& h, const Rational& c, int order, int tower_depth) {
  BiPoly hc = h - BiPoly(Number(c));
  if (bp::gcd(hc, hc.derivative(1)).degree(1) > 0)
    throw DegenerateInput("fiber h = " + to_string(c) + " is not squarefree in y");
  auto exps = expansions_at_infinity(hc, order, tower_depth);
  QLPoly prod{QL{{Rational(0), Rational(1)}}};
  Rational max_level = std::max(hc.degree(0), 0);
  for (const auto& e : exps) {
    FieldPtr f = e.series.field();
    if ((f ? f->degree() : 1) != e.conjugates) throw std::logic_error("branch field degree does not match conjugates");
    QLPoly nb = branch_norm(e.series, f);
    for (int k = 0; k < e.multiplicity; ++k) prod = polymul(prod, nb);
    max_level = std::max(max_level, e.leading_level);
  }
  auto hcoef = hc.coefficients(1);
  FactorizationCheck out;
  out.branches = static_cast<int>(exps.size());
  Rational lc = hc.lead(1)[0].to_rational();
  for (std::size_t j = 0; j < std::max(prod.size(), hcoef.size()); ++j) {
    QL r = j < prod.size() ? scaled(prod[j], lc) : QL{};
    if (j < hcoef.size())
      for (int i = 0; i <= hcoef[j].degree(); ++i) add_to(r, Rational(i), -hcoef[j][i].to_rational());
    if (!r.empty() && (!out.top_residual || r.begin()->first > *out.top_residual)) out.top_residual = r.begin()->first;
  }
  out.threshold = max_level - Rational(order) + Rational(h.degree());
  out.passes = !out.top_residual || *out.top_residual < out.threshold;
  return out;
}

std::optional<Number> transport(const Number& a, const FieldPtr& target) {
  if (a.is_rational()) return a;
  const FieldPtr& k = a.field();
  for (FieldPtr f = target; f; f = f->parent()) {
    if (f == k) return a.lift(target);
    if (f->depth() != k->depth() || f->minpoly() != k->minpoly()) continue;
    auto roots = approximate_roots(f->minpoly());
    if (nearest_root(roots, f->generator_value()) != nearest_root(roots, k->generator_value())) continue;
    return Number(f, a.repr()).lift(target);
  }
  return std::nullopt;
}

TypeConsistency check_type_consistency(const BiPoly& h, const std::vector<NewtonPuiseuxType>& types, const Rational& c,
                                       int order, int tower_depth) {
  TypeConsistency out;
  auto exps = expansions_at_infinity(h - BiPoly(Number(c)), order, tower_depth);
  auto fail = [&](const std::string& s) {
    out.holds = false;
    out.problems.push_back(s);
  };
  std::vector<int> refined_by(exps.size(), 0);
  for (std::size_t ti = 0; ti < types.size(); ++ti) {
    const auto& t = types[ti];
    std::string tname = "type " + std::to_string(ti) + " (" + t.series.render() + ")";
    UPoly g = t.h_leading - UPoly(Number(c));
    FieldPtr kt = t.series.field();
    kt = common_field(kt, t.h_leading.field());
    auto factors = up::factor_over(g, kt);
    std::vector<long> counted(factors.size(), 0);
    Rational e_param = t.series.exponent(t.series.parameter_exponent);
    for (std::size_t bi = 0; bi < exps.size(); ++bi) {
      const auto& ex = exps[bi];
      FieldPtr lb = ex.series.field();
      bool refines = true;
      int above = 0;
      for (const auto& term : ex.series.terms)
        if (ex.series.exponent(term.n) > e_param) ++above;
      if (above != static_cast<int>(t.series.terms.size())) continue;
      for (const auto& term : t.series.terms) {
        auto tr = transport(term.a, lb);
        if (!tr || ex.series.coeff_at(t.series.exponent(term.n)) != *tr) {
          refines = false;
          break;
        }
      }
      if (!refines) continue;
      bool resolved = ex.exact;
      for (const auto& term : ex.series.terms)
        if (ex.series.exponent(term.n) <= e_param) resolved = true;
      if (!resolved) {
        fail(tname + ": expansion " + std::to_string(bi) + " truncated before the parameter slot");
        continue;
      }
      Number alpha = ex.series.coeff_at(e_param);
      bool matched = false;
      for (std::size_t fi = 0; fi < factors.size() && !matched; ++fi) {
        std::vector<Number> fc;
        bool ok = true;
        for (const auto& cf : factors[fi].factor.coeffs()) {
          auto tr = transport(cf, lb);
          if (!tr) {
            ok = false;
            break;
          }
          fc.push_back(*tr);
        }
        if (!ok) continue;
        if (UPoly(fc).eval(alpha).is_zero()) {
          matched = true;
          counted[fi] += static_cast<long>(ex.multiplicity) * ex.conjugates / t.conjugates;
          ++refined_by[bi];
        }
      }
      if (!matched) fail(tname + ": refining expansion " + std::to_string(bi) + " hits no root of h_phi - c");
    }
    for (std::size_t fi = 0; fi < factors.size(); ++fi) {
      long expected = static_cast<long>(factors[fi].multiplicity) * factors[fi].factor.degree();
      if (counted[fi] != expected)
        fail(tname + ": root class " + factors[fi].factor.render("s") + " has multiplicity " + std::to_string(expected) +
             " but " + std::to_string(counted[fi]) + " refining expansions");
    }
  }
  for (std::size_t bi = 0; bi < exps.size(); ++bi)
    if (refined_by[bi] != 1)
      fail("expansion " + std::to_string(bi) + " (" + exps[bi].series.render() + ") refines " +
           std::to_string(refined_by[bi]) + " types");
  return out;
}

}  // namespace jaclab
