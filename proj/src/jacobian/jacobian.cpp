#include "jaclab/jacobian/jacobian.hpp"

#include "jaclab/algebra/factor_q.hpp"
#include "jaclab/algebra/parser.hpp"
#include "jaclab/errors.hpp"

#include <algorithm>
#include <random>

namespace jaclab {

namespace {

std::vector<Number> grid(int n) {
  std::vector<Number> out;
  for (int i = 0; i < n; ++i) out.emplace_back(static_cast<long>(i));
  return out;
}

// Integers k = 0, 1, 2, ... avoiding the roots of `avoid`.
std::vector<Number> grid_avoiding(int n, const UPoly& avoid) {
  std::vector<Number> out;
  for (long k = 0; static_cast<int>(out.size()) < n; ++k)
    if (avoid.eval(Number(k)).is_zero() == false) out.emplace_back(k);
  return out;
}

BiPoly squarefree_normalized(const BiPoly& p) {
  if (p.is_constant()) return BiPoly(1);
  return bp::integer_normalize(bp::squarefree_part(p));
}

// Res_y(C, F - t) as a polynomial in (x, t); C has leading y-coefficient 1.
BiPoly eliminate_on(const BiPoly& C, const BiPoly& F) {
  int d = C.degree(1);
  int dx = std::max(C.degree(0), 0) * std::max(F.degree(1), 0) + d * std::max(F.degree(0), 0);
  auto ts = grid(d + 1), xs = grid(dx + 1);
  std::vector<UPoly> rs;
  for (const auto& t : ts) rs.push_back(bp::resultant(C, F - BiPoly(t), 1));
  std::vector<std::vector<Number>> values(xs.size(), std::vector<Number>(ts.size()));
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < ts.size(); ++j) values[i][j] = rs[j].eval(xs[i]);
  return bp::interpolate2d(xs, ts, values);
}

Complex ipow(Complex z, int e) {
  Complex r = 1;
  for (int k = 0; k < e; ++k) r *= z;
  return r;
}

Complex eval_approx(const BiPoly& f, Complex x, Complex y) {
  Complex s = 0;
  for (const auto& [e, c] : f.terms()) s += c.approx() * ipow(x, e.first) * ipow(y, e.second);
  return s;
}

Rational top(const XiSeries& s) { return s.begin()->first; }

UPoly coefficient_at_zero(const XiSeries& s) {
  auto it = s.find(Rational(0));
  return it == s.end() ? UPoly() : it->second;
}

std::string render_values(const std::vector<Value>& vs) {
  std::string out = "[";
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? ", " : "") + vs[i].describe("u");
  return out + "]";
}

}  // namespace

BiPoly jacobian(const BiPoly& P, const BiPoly& Q) {
  return P.derivative(0) * Q.derivative(1) - P.derivative(1) * Q.derivative(0);
}

CriticalImage critical_value_image(const BiPoly& P, const BiPoly& Q) {
  BiPoly J = jacobian(P, Q);
  if (J.is_zero()) throw DegenerateInput("degenerate map: the Jacobian vanishes identically");
  CriticalImage out;
  BiPoly curve(1);
  for (const auto& comp : bp::irreducible_factors(J)) {
    Normalization n = y_normalize({comp});
    const BiPoly& C = n.polys[0];
    BiPoly Pc = n.change.apply(P), Qc = n.change.apply(Q);
    BiPoly A = eliminate_on(C, Pc), B = eliminate_on(C, Qc);
    bool p_const = A.degree(0) <= 0, q_const = B.degree(0) <= 0;
    if (p_const && q_const) {
      QPoly au = A.specialize(0, Number(0)).to_rational(), bv = B.specialize(0, Number(0)).to_rational();
      auto us = Value::all_roots(au), vs = Value::all_roots(bv);
      // pair the coordinates through a numeric point on each branch over a regular x
      for (long x1 = 0;; ++x1) {
        UPoly fiber = C.specialize(0, Number(x1));
        if (!up::is_squarefree(fiber)) continue;
        for (const Complex& y : approximate_roots(fiber.to_rational())) {
          Complex pu = eval_approx(Pc, Complex(static_cast<double>(x1)), y);
          Complex qv = eval_approx(Qc, Complex(static_cast<double>(x1)), y);
          auto nearest = [](const std::vector<Value>& cands, const Complex& z) {
            return *std::min_element(cands.begin(), cands.end(), [&](const Value& a, const Value& b) {
              return std::abs(a.approx() - z) < std::abs(b.approx() - z);
            });
          };
          std::pair<Value, Value> pt{nearest(us, pu), nearest(vs, qv)};
          if (std::find(out.points.begin(), out.points.end(), pt) == out.points.end()) out.points.push_back(pt);
        }
        break;
      }
      continue;
    }
    if (p_const) {
      curve = curve * BiPoly::from_univariate(A.specialize(0, Number(0)), 0);
      continue;
    }
    if (q_const) {
      curve = curve * BiPoly::from_univariate(B.specialize(0, Number(0)), 1);
      continue;
    }
    // Res_x(A(x, u), B(x, v)), then keep the factors g with g(P, Q) = 0 on the component
    int du = A.degree(1) * B.degree(0), dv = B.degree(1) * A.degree(0);
    auto us = grid_avoiding(du + 1, A.lead(0)), vs = grid_avoiding(dv + 1, B.lead(0));
    std::vector<std::vector<Number>> values(us.size(), std::vector<Number>(vs.size()));
    for (std::size_t i = 0; i < us.size(); ++i)
      for (std::size_t j = 0; j < vs.size(); ++j)
        values[i][j] = up::resultant(A.specialize(1, us[i]), B.specialize(1, vs[j]));
    BiPoly T = bp::interpolate2d(us, vs, values);
    for (const auto& g : bp::irreducible_factors(T))
      if (bp::divide(g.compose(Pc, Qc), C, nullptr)) curve = curve * g;
  }
  std::sort(out.points.begin(), out.points.end());
  out.curve = squarefree_normalized(curve);
  return out;
}

MapAnalysis exceptional_set_map(const BiPoly& P, const BiPoly& Q, int tower_depth) {
  require_dominant(P, Q);
  MapAnalysis out;
  out.jacobian = jacobian(P, Q);
  out.is_const_nonzero = out.jacobian.is_constant() && !out.jacobian.is_zero();
  out.critical.curve = BiPoly(1);
  if (!out.is_const_nonzero) out.critical = critical_value_image(P, Q);
  out.nonproper = nonproper_set(P, Q, tower_depth);
  BiPoly curve = out.critical.curve;
  for (const auto& c : out.nonproper.components) curve = curve * c.implicit;
  out.exceptional_curve = squarefree_normalized(curve);
  std::string desc;
  if (!out.exceptional_curve.is_constant()) desc = "curve " + out.exceptional_curve.render("u", "v") + " = 0";
  for (const auto& [u, v] : out.critical.points)
    desc += (desc.empty() ? "point (" : ", point (") + u.describe("u") + ", " + v.describe("v") + ")";
  out.exceptional_set = desc.empty() ? "empty" : desc;
  return out;
}

std::vector<Value> TangencyReport::all_values() const {
  std::vector<Value> out = vertical_components;
  for (const auto& t : values) out = merge_values(out, {t.u0});
  return out;
}

TangencyReport vertical_tangency_values(const NonProperSet& nonproper) {
  TangencyReport out;
  for (std::size_t idx = 0; idx < nonproper.components.size(); ++idx) {
    const UPoly& p = nonproper.components[idx].p_lead;
    if (p.degree() < 1) {
      out.vertical_components = merge_values(out.vertical_components, Value::roots_of(minimal_polynomial(p.coeff(0))));
      out.vertical_indices.push_back(static_cast<int>(idx));
      continue;
    }
    UPoly dp = p.derivative();
    if (dp.degree() < 1) continue;
    FieldPtr base = p.field();
    for (const auto& f : up::factor_over(dp, base)) {
      Number xi;
      FieldPtr field = base;
      if (f.factor.degree() == 1) {
        xi = -f.factor[0];
      } else {
        field = extend_field(base, f.factor, (base ? base->depth() : 0) + 1);
        xi = Number(field, field->adjoined());
      }
      for (const auto& row : conjugate_values({p.eval(xi), xi}, field)) {
        bool dup = std::any_of(out.values.begin(), out.values.end(), [&](const TangencyValue& t) {
          return t.u0 == row[0] && t.xi0 == row[1] && t.component == static_cast<int>(idx);
        });
        if (!dup) out.values.push_back({row[0], static_cast<int>(idx), row[1]});
      }
    }
  }
  return out;
}

Theorem1Report check_theorem1(const BiPoly& P, const BiPoly& Q, int tower_depth, std::uint64_t seed) {
  require_dominant(P, Q);
  Theorem1Report out;
  BiPoly J = jacobian(P, Q);
  out.hypothesis_met = J.is_constant() && !J.is_zero();
  out.e_p = exceptional_set_poly(P, tower_depth, seed).union_set;
  out.tangency = vertical_tangency_values(nonproper_set(P, Q, tower_depth));
  out.biconditional_holds = out.e_p == out.tangency.all_values();
  if (!out.hypothesis_met)
    out.note = "informational: the Jacobian is not a nonzero constant";
  else if (!out.biconditional_holds)
    out.note = "manual review required: E_P = " + render_values(out.e_p) + " but tangency values = " +
               render_values(out.tangency.all_values());
  return out;
}

bool Lemma6Report::all_pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const Lemma6Row& r) { return r.passes; });
}

Lemma6Report check_lemma6(const BiPoly& P, const BiPoly& Q, int tower_depth) {
  require_dominant(P, Q);
  Lemma6Report out;
  BiPoly J = jacobian(P, Q);
  out.hypothesis_met = J.is_constant() && !J.is_zero();
  Normalization n = y_normalize({P, Q});
  BiPoly Ps = n.change.apply(P), Qs = n.change.apply(Q);
  auto types = puiseux_types(n.polys[0], tower_depth);
  for (std::size_t i = 0; i < types.size(); ++i) {
    Lemma6Row row;
    row.type_index = static_cast<int>(i);
    row.series = types[i].series;
    XiSeries gp = substitute_exact(Ps, row.series), gq = substitute_exact(Qs, row.series);
    UPoly p = coefficient_at_zero(gp), q = coefficient_at_zero(gq);
    row.deg_p = p.degree();
    Rational b = top(gq) * row.series.m;
    row.b_exp = static_cast<int>(b.get_num().get_si());
    row.is_dicritical = top(gp) <= 0 && top(gq) <= 0 && std::max(p.degree(), q.degree()) >= 1;
    const UPoly& lead_q = gq.begin()->second;
    if (lead_q.degree() == 0) row.q_const = Value::from_number(lead_q[0]);
    row.passes = row.is_dicritical || (row.deg_p == 1 && row.q_const && row.b_exp > 0);
    out.rows.push_back(std::move(row));
  }
  return out;
}

Theorem2Report theorem2_verdict(const std::vector<std::pair<QPoly, QPoly>>& components) {
  if (components.empty()) throw DegenerateInput("empty component list");
  Theorem2Report out;
  bool all_monomial = true, any_line = false;
  for (auto [p, q] : components) {
    qp::trim(p);
    qp::trim(q);
    Theorem2Component c;
    c.p = p;
    c.q = q;
    int nonzero = 0;
    for (const auto& a : p) nonzero += a != 0;
    c.k = qp::degree(p);
    c.monomial_first = nonzero == 1 && c.k >= 1;
    c.line_like = (c.monomial_first && c.k == 1) || (qp::degree(p) <= 1 && qp::degree(q) <= 1);
    all_monomial = all_monomial && c.monomial_first;
    any_line = any_line || c.line_like;
    out.components.push_back(std::move(c));
  }
  out.verdict = all_monomial ? "excluded-by-theorem-2" : "no-conclusion";
  if (all_monomial)
    out.citations.push_back(
        "the non-proper set of a non-bijective polynomial map with nonzero constant Jacobian is not composed of "
        "images of t -> (t^k, q(t))");
  else
    out.citations.push_back("some component is not literally of the form t -> (a t^k, q(t)); nothing is concluded");
  if (any_line)
    out.citations.push_back(
        "line-like component: the non-proper set of a nonsingular non-bijective map cannot contain an irreducible "
        "component isomorphic to a line (Abhyankar-Moh embedding-line theorem)");
  return out;
}

TameAutomorphism random_tame_automorphism(std::uint64_t seed, int max_factors, int max_degree, int degree_cap) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> count(1, max_factors), kind(0, 1), coef(-3, 3);
  std::uniform_int_distribution<int> degree(1, max_degree);
  TameAutomorphism out{BiPoly::var(0), BiPoly::var(1), {}};
  int factors = count(rng);
  for (int f = 0; f < factors; ++f) {
    for (int attempt = 0; attempt < 20; ++attempt) {
      int k = kind(rng), d = degree(rng);
      QPoly g(d + 1);
      for (auto& c : g) c = coef(rng);
      while (g[d] == 0) g[d] = coef(rng);
      g[0] = 0;
      qp::trim(g);
      if (g.empty()) continue;
      UPoly gu = UPoly::from_rational(g);
      BiPoly P = out.P, Q = out.Q;
      std::string step;
      if (k == 0) {
        Q = Q + BiPoly::from_univariate(gu, 0).compose(P, P);
        step = "(x, y + " + render(BiPoly::from_univariate(gu, 0), {"x", "y"}) + ")";
      } else {
        P = P + BiPoly::from_univariate(gu, 1).compose(Q, Q);
        step = "(x + " + render(BiPoly::from_univariate(gu, 1), {"x", "y"}) + ", y)";
      }
      if (std::max(P.degree(), Q.degree()) > degree_cap) continue;
      out.P = P;
      out.Q = Q;
      out.steps.push_back(step);
      break;
    }
  }
  return out;
}

}  // namespace jaclab
