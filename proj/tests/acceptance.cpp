// Acceptance run: one PASS/FAIL line per criterion, non-zero exit when any fails.

#include "jaclab/algebra/parser.hpp"
#include "jaclab/errors.hpp"
#include "jaclab/jacobian/jacobian.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace jaclab;

namespace {

BiPoly P(const std::string& s) { return parse_polynomial(s); }
UPoly S(const QPoly& q) { return UPoly::from_rational(q); }

const std::vector<std::string> kCorpus = {"y^2 - x", "y^2 - x^3", "y^2 - x^3 - x", "y^2 + x*y + 1", "y",
                                          "(x + y) + (x + y)^2*y", "y^3 - x^2*y + x", "y^3 + x^2 + x*y"};

BiPoly monic(const BiPoly& h) { return is_monic_in_second(h) ? h : monic_normalize({h}).polys[0]; }

struct Check {
  std::ostringstream why;
  bool ok = true;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      why << " [" << what << "]";
    }
  }
};

// Runs fn and fails the check when it throws or exceeds `limit` seconds.
void timed(Check& c, const std::string& what, double limit, const std::function<void()>& fn) {
  auto t0 = std::chrono::steady_clock::now();
  try {
    fn();
  } catch (const std::exception& e) {
    c.require(false, what + ": " + e.what());
    return;
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.require(s < limit, what + " took " + std::to_string(s) + " s");
}

bool report(int n, const std::string& title, const Check& c) {
  std::cout << (c.ok ? "PASS" : "FAIL") << " " << n << " " << title << c.why.str() << "\n";
  return c.ok;
}

Check exceptional_sets() {
  Check c;
  timed(c, "y^2 - x", 5, [&] { c.require(exceptional_set_poly(P("y^2 - x")).union_set.empty(), "y^2 - x"); });
  timed(c, "y^2 - x^3", 5, [&] {
    c.require(exceptional_set_poly(P("y^2 - x^3")).union_set == std::vector<Value>{Value(Rational(0))}, "y^2 - x^3");
  });
  timed(c, "x + x^2 y", 5, [&] {
    auto r = exceptional_set_poly(P("x + x^2*y"));
    c.require(r.critical_values.empty(), "critical part of x + x^2 y");
    c.require(r.union_set == std::vector<Value>{Value(Rational(0))}, "E of x + x^2 y");
  });
  timed(c, "y^2 - x^3 - x", 5, [&] {
    auto v = critical_values(P("y^2 - x^3 - x"));
    c.require(v.eliminant == qp::monic({4, 0, 27}), "eliminant 27c^2 + 4");
    c.require(v.values == Value::roots_of(qp::monic({4, 0, 27})), "both roots present");
  });
  return c;
}

Check suzuki() {
  Check c;
  const std::vector<std::pair<std::string, int>> cases = {
      {"y^2 - x", 0}, {"y^2 - x^3", 2}, {"y^2 - x^3 - x", 2}, {"x + x^2*y", 1}};
  for (const auto& [h, expected] : cases)
    timed(c, h, 10, [&, h = h, expected = expected] {
      auto r = suzuki_check(P(h));
      c.require(r.holds && r.lhs == r.rhs && r.lhs == expected, h);
    });
  return c;
}

Check newton_factorization() {
  Check c;
  timed(c, "y^2 - x exact", 10, [&] {
    auto r = verify_newton_factorization(P("y^2 - x"), 0, 4);
    c.require(r.passes && !r.top_residual, "residual of y^2 - x is not 0");
  });
  for (const auto& s : kCorpus)
    timed(c, s, 30, [&] {
      BiPoly h = monic(P(s));
      for (int order = 4; order <= 8; ++order)
        c.require(verify_newton_factorization(h, 1, order).passes, s + " order " + std::to_string(order));
    });
  return c;
}

Check nonproper() {
  Check c;
  timed(c, "(y, y^2 + xy + 1)", 10, [&] {
    auto np = nonproper_set(P("y"), P("y^2 + x*y + 1"));
    BiPoly u = parse_polynomial("u", {"u", "v"});
    c.require(np.components.size() == 1 && same_zero_set(np.components[0].implicit, u), "dicritical route");
    c.require(same_zero_set(np.oracle_polynomial, u), "oracle route");
  });
  for (std::uint64_t seed = 0; seed < 10; ++seed)
    timed(c, "automorphism " + std::to_string(seed), 10, [&] {
      auto t = random_tame_automorphism(seed);
      auto np = nonproper_set(t.P, t.Q);
      c.require(np.components.empty() && np.oracle_polynomial.is_constant(), "seed " + std::to_string(seed));
    });
  return c;
}

Check lemma6() {
  Check c;
  for (std::uint64_t seed = 0; seed < 10; ++seed)
    timed(c, "automorphism " + std::to_string(seed), 10, [&] {
      auto t = random_tame_automorphism(seed);
      c.require(jacobian(t.P, t.Q) == BiPoly(1), "J = 1");
      auto r = check_lemma6(t.P, t.Q);
      for (const auto& row : r.rows) {
        if (row.is_dicritical) continue;
        bool ok = row.deg_p == 1 && row.q_const && *row.q_const != Value(Rational(0)) && row.b_exp > 0;
        c.require(ok, "seed " + std::to_string(seed) + " type " + std::to_string(row.type_index));
      }
    });
  return c;
}

Check theorem1() {
  Check c;
  std::vector<std::pair<BiPoly, BiPoly>> maps = {{P("x"), P("y")}, {P("x + (y + x^2)^2"), P("y + x^2")}};
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto t = random_tame_automorphism(seed);
    maps.emplace_back(t.P, t.Q);
  }
  for (std::size_t i = 0; i < maps.size(); ++i)
    timed(c, "map " + std::to_string(i), 10, [&] {
      auto r = check_theorem1(maps[i].first, maps[i].second);
      c.require(r.hypothesis_met && r.biconditional_holds && r.e_p.empty() && r.tangency.all_values().empty(),
                "map " + std::to_string(i));
    });
  auto tangency = [](const QPoly& p, const QPoly& q) {
    NonProperSet np;
    DicriticalComponent d;
    d.p_lead = S(p);
    d.q_lead = S(q);
    d.implicit = implicitize(d.p_lead, d.q_lead);
    np.components.push_back(d);
    auto vals = vertical_tangency_values(np).all_values();
    // discriminant containment: each value is a root of Res_v(F, dF/dv)
    QPoly disc = bp::resultant(d.implicit, d.implicit.derivative(1), 1).to_rational();
    bool contained = true;
    for (const auto& v : vals) contained = contained && qp::is_zero(qp::rem(disc, v.minpoly()));
    return std::make_pair(vals, contained);
  };
  auto [a, a_ok] = tangency({0, 0, 1}, {0, 0, 0, 1});
  c.require(a == std::vector<Value>{Value(Rational(0))} && a_ok, "(s^2, s^3) -> {0}");
  auto [b, b_ok] = tangency({0, 1}, {1, 0, 1});
  c.require(b.empty() && b_ok, "(s, s^2 + 1) -> empty");
  return c;
}

Check theorem2() {
  Check c;
  c.require(theorem2_verdict({{{0, 0, 1}, {0, 0, 0, 1}}}).verdict == "excluded-by-theorem-2", "(t^2, t^3)");
  c.require(theorem2_verdict({{{0, 1}, {1, 0, 1}}}).verdict == "excluded-by-theorem-2", "(t, t^2 + 1)");
  c.require(theorem2_verdict({{{0, -1, 0, 1}, {0, 0, 1}}}).verdict == "no-conclusion", "(t^3 - t, t^2)");
  return c;
}

Check puiseux_properties() {
  Check c;
  for (const auto& s : kCorpus)
    timed(c, s, 30, [&] {
      BiPoly h = monic(P(s));
      int order = default_order(h);
      int total = 0;
      for (const auto& e : expansions_at_infinity(h, order)) {
        total += e.multiplicity * e.conjugates;
        auto r = substitute_exact(h, e.series);
        c.require(e.exact ? r.empty() : (!r.empty() && r.begin()->first <= e.leading_level - Rational(order)),
                  s + " root property");
      }
      c.require(total == h.degree(1), s + " degree accounting");
      auto types = puiseux_types(h);
      for (long cv : {0L, 1L, -2L})
        c.require(check_type_consistency(h, types, Rational(cv), order).holds,
                  s + " multiplicity at c = " + std::to_string(cv));
    });
  return c;
}

}  // namespace

int main() {
  auto t0 = std::chrono::steady_clock::now();
  bool all = true;
  all &= report(1, "exceptional sets", exceptional_sets());
  all &= report(2, "Suzuki equality", suzuki());
  all &= report(3, "Newton factorization", newton_factorization());
  all &= report(4, "non-proper set vs oracle", nonproper());
  all &= report(5, "non-dicritical type invariants", lemma6());
  all &= report(6, "exceptional values vs vertical tangency", theorem1());
  all &= report(7, "monomial-form verdicts", theorem2());
  Check p = puiseux_properties();
  double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  p.require(total < 120, "acceptance run took " + std::to_string(total) + " s");
  all &= report(8, "Puiseux engine properties", p);
  return all ? 0 : 1;
}
