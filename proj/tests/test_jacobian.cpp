#include "doctest.h"

#include "jaclab/algebra/parser.hpp"
#include "jaclab/errors.hpp"
#include "jaclab/jacobian/jacobian.hpp"

using namespace jaclab;

namespace {

BiPoly P(const std::string& s) { return parse_polynomial(s); }
BiPoly UV(const std::string& s) { return parse_polynomial(s, {"u", "v"}); }
UPoly S(const QPoly& q) { return UPoly::from_rational(q); }

NonProperSet single(const QPoly& p, const QPoly& q) {
  NonProperSet np;
  DicriticalComponent c;
  c.p_lead = S(p);
  c.q_lead = S(q);
  c.implicit = implicitize(c.p_lead, c.q_lead);
  np.components.push_back(c);
  np.oracle_polynomial = c.implicit;
  return np;
}

const char* kAutP = "x + (y + x^2)^2";
const char* kAutQ = "y + x^2";

}  // namespace

TEST_CASE("Jacobian determinant") {
  CHECK(jacobian(P("x"), P("y")) == BiPoly(1));
  CHECK(jacobian(P("y"), P("y^2 + x*y + 1")) == P("-y"));
  CHECK(jacobian(P(kAutP), P(kAutQ)) == BiPoly(1));
  CHECK(jacobian(P("y"), P("x")) == BiPoly(-1));
  CHECK(jacobian(P("x + y"), P("(x + y)^2")).is_zero());
}

TEST_CASE("exceptional set of a map") {
  auto id = exceptional_set_map(P("x"), P("y"));
  CHECK(id.is_const_nonzero);
  CHECK(id.exceptional_set == "empty");

  auto aut = exceptional_set_map(P(kAutP), P(kAutQ));
  CHECK(aut.is_const_nonzero);
  CHECK(aut.critical.curve.is_constant());
  CHECK(aut.critical.points.empty());
  CHECK(aut.exceptional_curve.is_constant());

  auto m = exceptional_set_map(P("y"), P("y^2 + x*y + 1"));
  CHECK_FALSE(m.is_const_nonzero);
  CHECK(m.critical.curve.is_constant());
  REQUIRE(m.critical.points.size() == 1);
  CHECK(m.critical.points[0].first == Value(Rational(0)));
  CHECK(m.critical.points[0].second == Value(Rational(1)));
  CHECK(m.exceptional_curve == UV("u"));

  CHECK_THROWS_AS(exceptional_set_map(P("x + y"), P("(x + y)^2")), DegenerateInput);
}

TEST_CASE("critical value curves") {
  // fold: J = 2x, the line x = 0 maps onto v = 0
  auto fold = critical_value_image(P("x^2"), P("y"));
  CHECK(fold.curve == UV("u"));
  // Whitney cusp: J = 3x^2 + y, image is the discriminant curve
  auto cusp = critical_value_image(P("x^3 + x*y"), P("y"));
  CHECK(cusp.curve == UV("27*u^2 + 4*v^3"));
  CHECK(cusp.points.empty());
  // image lies on the critical curve pointwise
  for (long t : {-2L, 0L, 1L, 3L}) {
    Number x(t), y(-3 * t * t);
    CHECK(cusp.curve.eval(P("x^3 + x*y").eval(x, y), y).is_zero());
  }
}

TEST_CASE("vertical tangency values") {
  auto a = vertical_tangency_values(single({0, 0, 1}, {0, 0, 0, 1}));
  REQUIRE(a.values.size() == 1);
  CHECK(a.values[0].u0 == Value(Rational(0)));
  CHECK(a.values[0].xi0 == Value(Rational(0)));
  CHECK(a.vertical_components.empty());

  auto b = vertical_tangency_values(single({0, 1}, {1, 0, 1}));
  CHECK(b.values.empty());
  CHECK(b.all_values().empty());

  auto c = vertical_tangency_values(single({}, {1, 1}));
  CHECK(c.values.empty());
  REQUIRE(c.vertical_components.size() == 1);
  CHECK(c.vertical_components[0] == Value(Rational(0)));
  CHECK(c.vertical_indices == std::vector<int>{0});

  // p = s^3 - 3s has critical values -2, 2
  auto d = vertical_tangency_values(single({0, -3, 0, 1}, {0, 0, 1}));
  CHECK(d.all_values() == std::vector<Value>{Value(Rational(-2)), Value(Rational(2))});
  // p = s^3 - 2s: critical points are irrational, values conjugate
  auto e = vertical_tangency_values(single({0, -2, 0, 1}, {0, 1}));
  CHECK(e.values.size() == 2);
}

TEST_CASE("tangency values are branch points of the implicit curve over the u-line") {
  const std::vector<std::pair<QPoly, QPoly>> comps = {
      {{0, 0, 1}, {0, 0, 0, 1}}, {{0, -3, 0, 1}, {0, 0, 1}}, {{0, -2, 0, 1}, {0, 1}}, {{1, 0, 2}, {0, 1, 1}}};
  for (const auto& [p, q] : comps) {
    auto np = single(p, q);
    const BiPoly& F = np.components[0].implicit;
    QPoly disc = bp::resultant(F, F.derivative(1), 1).to_rational();
    for (const auto& t : vertical_tangency_values(np).values) CHECK(qp::is_zero(qp::rem(disc, t.u0.minpoly())));
  }
}

TEST_CASE("exceptional values vs vertical tangency checker") {
  auto aut = check_theorem1(P(kAutP), P(kAutQ));
  CHECK(aut.hypothesis_met);
  CHECK(aut.e_p.empty());
  CHECK(aut.tangency.all_values().empty());
  CHECK(aut.biconditional_holds);

  auto id = check_theorem1(P("x"), P("y"));
  CHECK(id.hypothesis_met);
  CHECK(id.biconditional_holds);

  auto m = check_theorem1(P("y"), P("y^2 + x*y + 1"));
  CHECK_FALSE(m.hypothesis_met);
  CHECK(m.e_p.empty());
  CHECK(m.tangency.vertical_components == std::vector<Value>{Value(Rational(0))});
  CHECK(m.note.find("informational") != std::string::npos);
}

TEST_CASE("non-dicritical type checker") {
  auto aut = check_lemma6(P(kAutP), P(kAutQ));
  CHECK(aut.hypothesis_met);
  CHECK_FALSE(aut.rows.empty());
  CHECK(aut.all_pass());

  auto id = check_lemma6(P("x"), P("y"));
  CHECK(id.hypothesis_met);
  REQUIRE(id.rows.size() == 1);
  CHECK(id.rows[0].passes);
  CHECK(id.rows[0].deg_p == 1);

  auto m = check_lemma6(P("y"), P("y^2 + x*y + 1"));
  CHECK_FALSE(m.hypothesis_met);
  CHECK_FALSE(m.rows.empty());
}

TEST_CASE("monomial-form verdicts") {
  auto a = theorem2_verdict({{{0, 0, 1}, {0, 0, 0, 1}}});
  CHECK(a.verdict == "excluded-by-theorem-2");
  CHECK(a.components[0].k == 2);
  CHECK_FALSE(a.components[0].line_like);

  auto b = theorem2_verdict({{{0, 1}, {1, 0, 1}}});
  CHECK(b.verdict == "excluded-by-theorem-2");
  CHECK(b.components[0].line_like);
  CHECK(b.citations.size() == 2);

  auto c = theorem2_verdict({{{0, -1, 0, 1}, {0, 0, 1}}});
  CHECK(c.verdict == "no-conclusion");

  auto mixed = theorem2_verdict({{{0, 0, 1}, {0, 0, 0, 1}}, {{1, 0, 1}, {0, 1}}});
  CHECK(mixed.verdict == "no-conclusion");

  CHECK_THROWS_AS(theorem2_verdict({}), DegenerateInput);
}

TEST_CASE("excluded forms are tangent only to u = 0") {
  const std::vector<std::pair<QPoly, QPoly>> comps = {
      {{0, 0, 1}, {0, 0, 0, 1}}, {{0, 1}, {1, 0, 1}}, {{0, 0, 0, -2}, {0, 1, 1}}};
  for (const auto& pq : comps) {
    auto r = theorem2_verdict({pq});
    REQUIRE(r.verdict == "excluded-by-theorem-2");
    auto vals = vertical_tangency_values(single(pq.first, pq.second)).all_values();
    bool ok = r.components[0].k == 1 || vals == std::vector<Value>{Value(Rational(0))};
    CHECK(ok);
  }
}

TEST_CASE("random tame automorphisms") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto t = random_tame_automorphism(seed);
    INFO("seed ", seed, ": ", render(t.P), ", ", render(t.Q));
    CHECK(std::max(t.P.degree(), t.Q.degree()) <= 6);
    CHECK(jacobian(t.P, t.Q) == BiPoly(1));
    auto m = exceptional_set_map(t.P, t.Q);
    CHECK(m.exceptional_set == "empty");
    auto th = check_theorem1(t.P, t.Q);
    CHECK(th.e_p.empty());
    CHECK(th.biconditional_holds);
    CHECK(check_lemma6(t.P, t.Q).all_pass());
    CHECK(fiber_euler_characteristic(t.P, Value(Rational(static_cast<long>(seed)))).chi == 1);
  }
  CHECK(random_tame_automorphism(3).steps == random_tame_automorphism(3).steps);
}
