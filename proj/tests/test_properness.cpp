#include "doctest.h"

#include "jaclab/algebra/parser.hpp"
#include "jaclab/errors.hpp"
#include "jaclab/jacobian/jacobian.hpp"
#include "jaclab/properness/properness.hpp"

using namespace jaclab;

namespace {

BiPoly P(const std::string& s) { return parse_polynomial(s); }
BiPoly UV(const std::string& s) { return parse_polynomial(s, {"u", "v"}); }
UPoly S(const QPoly& q) { return UPoly::from_rational(q); }

BiPoly product(const NonProperSet& np) {
  BiPoly out(1);
  for (const auto& c : np.components) out = out * c.implicit;
  return out;
}

const std::vector<std::pair<std::string, std::string>> kMaps = {
    {"y", "y^2 + x*y + 1"},
    {"x^2*y", "x*y + x"},
    {"x*y", "x*y^2 + x"},
    {"x + y^2", "y + x*y"},
};

}  // namespace

TEST_CASE("non-constant Jacobian example has one vertical non-proper component") {
  auto np = nonproper_set(P("y"), P("y^2 + x*y + 1"));
  REQUIRE(np.components.size() == 1);
  const auto& c = np.components[0];
  CHECK(c.series.render() == "s*x^(-1)");
  CHECK(c.p_lead == UPoly());
  CHECK(c.q_lead == S({1, 1}));
  CHECK(c.a_exp == -1);
  CHECK(c.b_exp == 0);
  CHECK(c.implicit == UV("u"));
  CHECK(same_zero_set(np.oracle_polynomial, UV("u")));
  CHECK(np.agree);
}

TEST_CASE("automorphisms are proper") {
  CHECK(nonproper_set(P("x"), P("y")).components.empty());
  auto np = nonproper_set(P("x + (y + x^2)^2"), P("y + x^2"));
  CHECK(np.components.empty());
  CHECK(np.oracle_polynomial.is_constant());
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    auto t = random_tame_automorphism(seed);
    auto r = nonproper_set(t.P, t.Q);
    CHECK_MESSAGE(r.components.empty(), "seed ", seed, ": ", render(t.P), ", ", render(t.Q));
    CHECK(r.oracle_polynomial.is_constant());
  }
}

TEST_CASE("dependent coordinates are a degenerate map") {
  CHECK_THROWS_AS(nonproper_set(P("y"), P("y^2")), DegenerateInput);
  CHECK_THROWS_AS(require_dominant(P("x + y"), P("(x + y)^3 - 1")), DegenerateInput);
  CHECK_THROWS_AS(require_dominant(P("3"), P("x")), DegenerateInput);
}

TEST_CASE("implicitization of parametrized curves") {
  CHECK(implicitize(S({0, 0, 1}), S({0, 0, 0, 1})) == UV("v^2 - u^3"));
  CHECK(implicitize(UPoly(), S({1, 1})) == UV("u"));
  CHECK(implicitize(S({0, 1}), S({0, 0, 1})) == UV("v - u^2"));
  CHECK(implicitize(S({0, 2}), S({3})) == UV("v - 3"));
  CHECK_THROWS_AS(implicitize(S({1}), S({2})), DegenerateInput);
}

TEST_CASE("implicitization over a number field norms down to Q") {
  FieldPtr f = extend_field(nullptr, S({-2, 0, 1}), 1);
  Number r(f, f->adjoined());
  UPoly p = UPoly::x();
  UPoly q = UPoly::monomial(Number(1), 2) + UPoly(r);  // s^2 + sqrt(2)
  BiPoly F = implicitize(p, q);
  CHECK(F.is_rational());
  CHECK(F == UV("(v - u^2)^2 - 2"));
}

TEST_CASE("dicritical components: curve points and exponent signs") {
  for (const auto& [ps, qs] : kMaps) {
    auto np = nonproper_set(P(ps), P(qs));
    CHECK(np.agree);
    INFO(ps, ", ", qs);
    for (const auto& c : np.components) {
      CHECK(c.a_exp <= 0);
      CHECK(c.b_exp <= 0);
      CHECK(std::max(c.p_lead.degree(), c.q_lead.degree()) >= 1);
      for (const Rational& xi : {Rational(0), Rational(1), Rational(-1), Rational(1, 2)}) {
        Number u = c.p_lead.eval(Number(xi)), v = c.q_lead.eval(Number(xi));
        CHECK(c.implicit.eval(u, v).is_zero());
        CHECK(np.oracle_polynomial.eval(u, v).is_zero());
      }
    }
  }
}

TEST_CASE("non-proper set does not depend on source coordinates") {
  for (const auto& [ps, qs] : kMaps) {
    INFO(ps, ", ", qs);
    auto base = nonproper_set(P(ps), P(qs));
    for (long t : {1L, -2L}) {
      LinearChange L = LinearChange::shear(t);
      auto moved = nonproper_set(L.apply(P(ps)), L.apply(P(qs)));
      CHECK(same_zero_set(product(base), product(moved)));
    }
    auto swapped = nonproper_set(P(ps).swapped(), P(qs).swapped());
    CHECK(same_zero_set(product(base), product(swapped)));
  }
}

TEST_CASE("zero-set comparison") {
  CHECK(same_zero_set(UV("u^2*v"), UV("u*v")));
  CHECK_FALSE(same_zero_set(UV("u"), UV("v")));
  CHECK(same_zero_set(BiPoly(1), BiPoly(5)));
  CHECK_FALSE(same_zero_set(BiPoly(1), UV("u")));
}
