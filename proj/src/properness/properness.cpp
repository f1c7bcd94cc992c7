#include "jaclab/properness/properness.hpp"

#include "jaclab/errors.hpp"
#include "jaclab/jacobian/jacobian.hpp"

namespace jaclab {

namespace {

std::vector<Number> grid(int n) {
  std::vector<Number> out;
  for (int i = 0; i < n; ++i) out.emplace_back(static_cast<long>(i));
  return out;
}

Number norm_down(const Number& a, const FieldPtr& field) {
  QPoly n = up::norm_over(UPoly(a), field);
  return n.empty() ? Number() : Number(n[0]);
}

// Product of the conjugates of F over Q.
BiPoly norm_to_rational(const BiPoly& F, const FieldPtr& field) {
  int n = field->degree();
  int du = std::max(F.degree(0), 0) * n, dv = std::max(F.degree(1), 0) * n;
  auto us = grid(du + 1), vs = grid(dv + 1);
  std::vector<std::vector<Number>> values(us.size(), std::vector<Number>(vs.size()));
  for (std::size_t i = 0; i < us.size(); ++i)
    for (std::size_t j = 0; j < vs.size(); ++j) values[i][j] = norm_down(F.eval(us[i], vs[j]), field);
  return bp::interpolate2d(us, vs, values);
}

Rational top(const XiSeries& s) { return s.begin()->first; }

UPoly coefficient_at_zero(const XiSeries& s) {
  auto it = s.find(Rational(0));
  return it == s.end() ? UPoly() : it->second;
}

// Leading x-coefficient of Res_y(A - u, B - v) as a polynomial in (u, v); A, B have
// constant leading y-coefficients.
BiPoly leading_x_coefficient(const BiPoly& A, const BiPoly& B) {
  auto us = grid(B.degree(1) + 1), vs = grid(A.degree(1) + 1);
  std::vector<std::vector<UPoly>> rs(us.size(), std::vector<UPoly>(vs.size()));
  int top_degree = -1;
  for (std::size_t i = 0; i < us.size(); ++i)
    for (std::size_t j = 0; j < vs.size(); ++j) {
      rs[i][j] = bp::resultant(A - BiPoly(us[i]), B - BiPoly(vs[j]), 1);
      top_degree = std::max(top_degree, rs[i][j].degree());
    }
  if (top_degree < 0) throw DegenerateInput("Res_y(P - u, Q - v) vanishes identically: fibers are not finite");
  std::vector<std::vector<Number>> values(us.size(), std::vector<Number>(vs.size()));
  for (std::size_t i = 0; i < us.size(); ++i)
    for (std::size_t j = 0; j < vs.size(); ++j) values[i][j] = rs[i][j].coeff(top_degree);
  return bp::interpolate2d(us, vs, values);
}

BiPoly squarefree_normalized(const BiPoly& p) {
  if (p.is_constant()) return BiPoly(1);
  return bp::integer_normalize(bp::squarefree_part(p));
}

bool has_constant_y_lead(const BiPoly& p) { return p.degree(1) >= 1 && p.lead(1).is_constant(); }

}  // namespace

void require_dominant(const BiPoly& P, const BiPoly& Q) {
  if (P.is_constant() || Q.is_constant() || jacobian(P, Q).is_zero())
    throw DegenerateInput("degenerate map: the Jacobian vanishes identically");
}

BiPoly implicitize(const UPoly& p, const UPoly& q) {
  if (p.degree() < 1 && q.degree() < 1) throw DegenerateInput("implicitization needs a non-constant coordinate");
  FieldPtr field = common_field(p.field(), q.field());
  BiPoly F;
  if (p.degree() < 1) {
    F = BiPoly::var(0) - BiPoly(p.coeff(0));
  } else if (q.degree() < 1) {
    F = BiPoly::var(1) - BiPoly(q.coeff(0));
  } else {
    auto us = grid(q.degree() + 1), vs = grid(p.degree() + 1);
    std::vector<std::vector<Number>> values(us.size(), std::vector<Number>(vs.size()));
    for (std::size_t i = 0; i < us.size(); ++i)
      for (std::size_t j = 0; j < vs.size(); ++j)
        values[i][j] = up::resultant(UPoly(us[i]) - p, UPoly(vs[j]) - q);
    F = bp::interpolate2d(us, vs, values);
  }
  if (!F.is_rational()) F = norm_to_rational(F, field);
  return bp::integer_normalize(bp::squarefree_part(F));
}

std::vector<DicriticalComponent> dicritical_series(const BiPoly& P, const BiPoly& Q, int tower_depth) {
  require_dominant(P, Q);
  Normalization n = y_normalize({P, Q});
  BiPoly Ps = n.change.apply(P), Qs = n.change.apply(Q);
  std::vector<DicriticalComponent> out;
  const char* names[2] = {"P", "Q"};
  for (int src = 0; src < 2; ++src) {
    std::vector<NewtonPuiseuxType> types;
    try {
      types = puiseux_types(n.polys[src], tower_depth);
    } catch (const ResourceLimit& e) {
      throw ResourceLimit(std::string("types of ") + names[src] + ": " + e.what());
    }
    for (std::size_t i = 0; i < types.size(); ++i) {
      const FractionalSeries& phi = types[i].series;
      XiSeries gp = substitute_exact(Ps, phi), gq = substitute_exact(Qs, phi);
      if (gp.empty() || gq.empty()) throw std::logic_error("coordinate vanishes along a one-parameter family");
      if (top(gp) > 0 || top(gq) > 0) continue;
      DicriticalComponent c;
      c.series = phi;
      c.p_lead = coefficient_at_zero(gp);
      c.q_lead = coefficient_at_zero(gq);
      if (std::max(c.p_lead.degree(), c.q_lead.degree()) < 1) continue;
      Rational a = top(gp) * phi.m, b = top(gq) * phi.m;
      c.a_exp = static_cast<int>(a.get_num().get_si());
      c.b_exp = static_cast<int>(b.get_num().get_si());
      c.source = names[src];
      c.type_index = static_cast<int>(i);
      bool dup = false;
      for (const auto& d : out)
        if (d.series.m == phi.m && d.series.render() == phi.render()) dup = true;
      if (dup) continue;
      c.implicit = implicitize(c.p_lead, c.q_lead);
      out.push_back(std::move(c));
    }
  }
  return out;
}

BiPoly nonproper_oracle(const BiPoly& P, const BiPoly& Q) {
  require_dominant(P, Q);
  Normalization n = y_normalize({P, Q});
  BiPoly A = n.change.apply(P), B = n.change.apply(Q);
  BiPoly first = squarefree_normalized(leading_x_coefficient(A, B));
  if (first.is_constant()) return first;
  int bound = A.degree() + B.degree() + 2;
  for (long t = 1; t <= bound; ++t) {
    for (long s : {t, -t}) {
      LinearChange sh = LinearChange::shear(s);
      BiPoly A2 = sh.apply(A), B2 = sh.apply(B);
      if (!has_constant_y_lead(A2) || !has_constant_y_lead(B2)) continue;
      BiPoly second = squarefree_normalized(leading_x_coefficient(A2, B2));
      BiPoly g = bp::gcd(first, second);
      return squarefree_normalized(g);
    }
  }
  return first;
}

bool same_zero_set(const BiPoly& a, const BiPoly& b) {
  BiPoly sa = squarefree_normalized(a), sb = squarefree_normalized(b);
  if (sa.is_constant() || sb.is_constant()) return sa.is_constant() && sb.is_constant();
  return bp::divide(sa, sb, nullptr) && bp::divide(sb, sa, nullptr);
}

NonProperSet nonproper_set(const BiPoly& P, const BiPoly& Q, int tower_depth) {
  NonProperSet out;
  out.normalization = y_normalize({P, Q}).change;
  for (auto& c : dicritical_series(P, Q, tower_depth)) {
    bool dup = false;
    for (const auto& d : out.components)
      if (d.implicit == c.implicit) dup = true;
    if (!dup) out.components.push_back(std::move(c));
  }
  out.oracle_polynomial = nonproper_oracle(P, Q);
  BiPoly prod(1);
  for (const auto& c : out.components) prod = prod * c.implicit;
  out.agree = same_zero_set(prod, out.oracle_polynomial);
  if (!out.agree) {
    std::string comps;
    for (const auto& c : out.components) comps += " " + c.implicit.render("u", "v") + " (from " + c.source + ")";
    throw CorrectnessAlarm("non-proper set mismatch: dicritical components [" + comps + " ] vs oracle " +
                           out.oracle_polynomial.render("u", "v"));
  }
  return out;
}

}  // namespace jaclab
