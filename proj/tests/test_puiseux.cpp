#include "doctest.h"

#include "jaclab/algebra/parser.hpp"
#include "jaclab/errors.hpp"
#include "jaclab/puiseux/newton.hpp"

#include <cmath>

using namespace jaclab;

namespace {

BiPoly P(const std::string& s) { return parse_polynomial(s); }

const std::vector<std::string> kCorpus = {"y^2 - x", "y^2 - x^3", "y^2 - x^3 - x", "y^2 + x*y + 1", "y",
                                          "(x+y) + (x+y)^2*y", "y^3 - x^2*y + x", "y^3 + x^2 + x*y"};

// Numeric oracle: evaluate the truncated series at a real x0 and plug into h.
long double residual_at(const BiPoly& h, const Expansion& e, long double x0) {
  Complex y = 0;
  for (const auto& t : e.series.terms) y += t.a.approx() * std::pow(Complex(x0), Complex(static_cast<long double>(t.n) / e.series.m));
  Complex v = 0;
  for (const auto& [ex, c] : h.terms())
    v += c.approx() * std::pow(Complex(x0), Complex(static_cast<long double>(ex.first))) *
         std::pow(y, static_cast<long double>(ex.second));
  return std::abs(v);
}

}  // namespace

TEST_CASE("expansions of y^2 - x are exact square roots") {
  auto ex = expansions_at_infinity(P("y^2 - x"), 3);
  REQUIRE(ex.size() == 2);
  for (const auto& e : ex) {
    CHECK(e.exact);
    CHECK(e.series.m == 2);
    REQUIRE(e.series.terms.size() == 1);
    CHECK(e.series.terms[0].n == 1);
  }
  CHECK(ex[0].series.terms[0].a + ex[1].series.terms[0].a == Number(0));
}

TEST_CASE("expansions of y^2 - x^3 - x") {
  auto ex = expansions_at_infinity(P("y^2 - x^3 - x"), 3);
  REQUIRE(ex.size() == 2);
  for (const auto& e : ex) {
    Number s = e.series.coeff_at(Rational(3, 2));
    CHECK((s == Number(1) || s == Number(-1)));
    CHECK(e.series.coeff_at(Rational(-1, 2)) == Number(Rational(1, 2)) * s);
  }
  auto ex6 = expansions_at_infinity(P("y^2 - x^3 - x"), 6);
  for (const auto& e : ex6) {
    Number s = e.series.coeff_at(Rational(3, 2));
    CHECK(e.series.coeff_at(Rational(-5, 2)) == Number(Rational(-1, 8)) * s);
  }
}

TEST_CASE("expansions of y^2 + x*y + 1") {
  auto ex = expansions_at_infinity(P("y^2 + x*y + 1"), 3);
  REQUIRE(ex.size() == 2);
  bool big = false, small = false;
  for (const auto& e : ex) {
    if (e.series.coeff_at(1) == Number(-1)) {
      big = true;
      CHECK(e.series.coeff_at(-1) == Number(1));
    } else {
      small = true;
      CHECK(e.series.terms.front().n == -1 * e.series.m);
      CHECK(e.series.coeff_at(-1) == Number(-1));
    }
  }
  CHECK(big);
  CHECK(small);
}

TEST_CASE("root property, degree accounting, numeric residual") {
  for (const auto& s : kCorpus) {
    BiPoly h = P(s);
    if (!is_monic_in_second(h)) h = monic_normalize({h}).polys[0];
    int order = default_order(h);
    auto ex = expansions_at_infinity(h, order);
    int total = 0;
    for (const auto& e : ex) {
      total += e.multiplicity * e.conjugates;
      auto r = substitute_exact(h, e.series);
      if (e.exact) {
        CHECK(r.empty());
      } else {
        REQUIRE(!r.empty());
        CHECK(r.begin()->first <= e.leading_level - Rational(order));
      }
      // numeric: residual at large x is far below |x|^level
      long double x0 = 1e3L;
      long double res = residual_at(h, e, x0);
      long double scale = std::pow(x0, static_cast<long double>(mpq_class(e.leading_level).get_d()));
      CHECK(res <= 1e-6L * scale + 1e-9L);
    }
    CHECK_MESSAGE(total == h.degree(1), s);
  }
}

TEST_CASE("types of the standard examples") {
  auto t1 = puiseux_types(P("y^2 - x"));
  REQUIRE(t1.size() == 2);
  for (const auto& t : t1) {
    CHECK(t.series.m == 2);
    CHECK(t.series.parameter_exponent == -1);
    CHECK(t.h_leading.degree() == 1);
    Number a = t.series.terms.at(0).a;
    CHECK(t.h_leading == UPoly({Number(0), Number(2) * a}));
    CHECK(t.sheet_count == 1);
    // h(x, phi) = h_phi(xi) + lower
    auto g = substitute_series(P("y^2 - x"), t.series, 4);
    REQUIRE(g.size() == 2);
    CHECK(g[0].first == 0);
    CHECK(g[0].second == t.h_leading);
    CHECK(g[1].first == -1);
  }
  auto t2 = puiseux_types(P("y^2 - x^3"));
  REQUIRE(t2.size() == 2);
  for (const auto& t : t2) {
    CHECK(t.series.m == 2);
    CHECK(t.series.parameter_exponent == -3);
    CHECK(t.h_leading.degree() == 1);
  }
  auto t3 = puiseux_types(P("y"));
  REQUIRE(t3.size() == 1);
  CHECK(t3[0].series.m == 1);
  CHECK(t3[0].series.terms.empty());
  CHECK(t3[0].series.parameter_exponent == 0);
  CHECK(t3[0].h_leading == UPoly::x());
}

TEST_CASE("types satisfy the defining identity on the corpus") {
  for (const auto& s : kCorpus) {
    BiPoly h = P(s);
    if (!is_monic_in_second(h)) h = monic_normalize({h}).polys[0];
    auto types = puiseux_types(h);
    int total = 0;
    for (const auto& t : types) {
      CHECK(t.h_leading.degree() >= 1);
      auto g = substitute_series(h, t.series, 1);
      REQUIRE(g.size() == 1);
      CHECK(g[0].first == 0);
      CHECK(g[0].second == t.h_leading);
      total += t.h_leading.degree() * t.conjugates;
    }
    CHECK_MESSAGE(total == h.degree(1), s);
    for (long c : {0L, 1L, -2L}) {
      auto rep = check_type_consistency(h, types, Rational(c), default_order(h));
      for (const auto& p : rep.problems) MESSAGE(s << " c=" << c << ": " << p);
      CHECK(rep.holds);
    }
  }
}

TEST_CASE("substitute_series examples and linearity") {
  FractionalSeries phi;
  phi.m = 2;
  phi.has_parameter = true;
  phi.parameter_exponent = 1;
  auto g = substitute_series(P("y^2 - x"), phi, 5);
  REQUIRE(g.size() == 1);
  CHECK(g[0].first == 1);
  CHECK(g[0].second == UPoly({Number(-1), Number(0), Number(1)}));
  FractionalSeries id;
  id.has_parameter = true;
  auto g2 = substitute_series(P("y"), id, 3);
  REQUIRE(g2.size() == 1);
  CHECK(g2[0].second == UPoly::x());
  BiPoly a = P("y^3 - x*y + 2"), b = P("x^2*y^2 - y + x");
  auto sa = substitute_exact(a, phi), sb = substitute_exact(b, phi), sab = substitute_exact(a + b, phi);
  for (const auto& [e, c] : sab) CHECK(c == sa[e] + sb[e]);
}

TEST_CASE("sheet counts") {
  FractionalSeries a = FractionalSeries::from_terms({{Rational(1, 2), Number(1)}}, nullptr);
  a.has_parameter = true;
  a.parameter_exponent = -1;
  CHECK(sheet_count(a) == 1);
  FractionalSeries b;
  b.m = 1;
  b.has_parameter = true;
  b.parameter_exponent = -1;
  CHECK(sheet_count(b) == 1);
  FractionalSeries c;
  c.m = 4;
  c.terms = {{2, Number(1)}};
  c.has_parameter = true;
  c.parameter_exponent = -1;
  CHECK(sheet_count(c) == 2);
}

TEST_CASE("Newton factorization") {
  auto r0 = verify_newton_factorization(P("y^2 - x"), 0, 4);
  CHECK(r0.passes);
  CHECK(!r0.top_residual);
  for (int order = 4; order <= 8; ++order) {
    CHECK(verify_newton_factorization(P("y^2 - x^3 - x"), 1, order).passes);
    CHECK(verify_newton_factorization(P("y^2 + x*y + 1"), 0, order).passes);
  }
  CHECK_THROWS_AS(verify_newton_factorization(P("y^2 - 2*x*y + x^2"), 0, 4), DegenerateInput);
}

TEST_CASE("tower depth limit") {
  // the cube root of x needs one extension, so a depth limit of zero trips
  CHECK_THROWS_AS(expansions_at_infinity(P("y^3 - x"), 4, 0), ResourceLimit);
}
