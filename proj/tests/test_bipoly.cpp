#include "doctest.h"

#include "jaclab/algebra/parser.hpp"
#include "jaclab/errors.hpp"

#include <random>

using namespace jaclab;

namespace {

BiPoly P(const std::string& s) { return parse_polynomial(s); }

// Gaussian-elimination determinant over Q.
Rational det(std::vector<std::vector<Rational>> a) {
  std::size_t n = a.size();
  Rational d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      d = -d;
    }
    d *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return d;
}

// Sylvester determinant in y of p(x0, y), q(x0, y) using the formal y-degrees of p and q.
Rational sylvester_at(const BiPoly& p, const BiPoly& q, const Rational& x0) {
  int m = p.degree(1), n = q.degree(1);
  if (m == 0) return pow(p, n).specialize(0, Number(x0)).coeff(0).to_rational();
  if (n == 0) return pow(q, m).specialize(0, Number(x0)).coeff(0).to_rational();
  UPoly a = p.specialize(0, Number(x0)), b = q.specialize(0, Number(x0));
  std::vector<std::vector<Rational>> s(m + n, std::vector<Rational>(m + n));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) s[r][r + m - k] = a.coeff(k).to_rational();
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) s[n + r][r + n - k] = b.coeff(k).to_rational();
  return det(s);
}

BiPoly random_poly(std::mt19937_64& rng, int deg) {
  std::uniform_int_distribution<long> c(-3, 3);
  BiPoly r;
  for (int i = 0; i <= deg; ++i)
    for (int j = 0; i + j <= deg; ++j)
      if (j != deg) r += BiPoly::monomial(Number(c(rng)), i, j);
  r += BiPoly::monomial(Number(1), 0, deg);
  return r;
}

}  // namespace

TEST_CASE("parse examples") {
  BiPoly a = P("y^2 - x^3");
  CHECK(a.terms().size() == 2);
  CHECK(a.coeff(0, 2) == Number(1));
  CHECK(a.coeff(3, 0) == Number(-1));
  BiPoly b = P("(x+y)*(x-y)");
  CHECK(b == BiPoly::monomial(Number(1), 2, 0) + BiPoly::monomial(Number(-1), 0, 2));
  BiPoly c = P("y^2 + x*y + 1");
  CHECK(c.terms().size() == 3);
  CHECK(c.coeff(1, 1) == Number(1));
  CHECK(c.coeff(0, 0) == Number(1));
  CHECK(render(a) == "y^2 - x^3");
  CHECK(P("-(x - 1/2)^2").coeff(0, 0) == Number(Rational(-1, 4)));
  CHECK(parse_polynomial("u^2 - v", {"u", "v"}).coeff(2, 0) == Number(1));
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(P("x + "), ParseError);
  CHECK_THROWS_AS(P("z*x"), ParseError);
  CHECK_THROWS_AS(P("1.5*x"), ParseError);
  CHECK_THROWS_AS(P("x^-1"), ParseError);
  CHECK_THROWS_AS(P("(x + y"), ParseError);
  CHECK_THROWS_AS(P("x/0"), ParseError);
  try {
    P("x + q");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("parse/render round trip") {
  for (const char* s : {"y^2 - x", "y^2 - x^3 - x", "x + x^2*y", "y^2 + x*y + 1", "(y^2 - x)^2 + (y^2 - x)",
                        "x + (y + x^2)^2", "1/2*x - 3/7*y^3 + 5", "-y", "0", "7"}) {
    BiPoly p = P(s);
    CHECK(P(render(p)) == p);
  }
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    BiPoly p = random_poly(rng, 1 + i % 4);
    CHECK(P(render(p)) == p);
  }
}

TEST_CASE("resultant examples") {
  CHECK(bp::resultant(P("y^2 - x"), P("2*y"), 1) == UPoly::from_rational({0, -4}));
  auto b = Number(Rational(5, 3)), a = Number(Rational(-2));
  BiPoly la = BiPoly::var(1) - BiPoly(a), lb = BiPoly::var(1) - BiPoly(b);
  // Sylvester determinant convention: Res(y - a, y - b) = a - b
  CHECK(bp::resultant(la, lb, 1) == UPoly(a - b));
  // with (x, y) playing (u, y): Res_y(y - x, y^2 + x y + 1 - v) evaluated at v = 0
  CHECK(bp::resultant(P("y - x"), P("y^2 + x*y + 1"), 1) == UPoly::from_rational({1, 0, 2}));
  CHECK(bp::resultant(P("3"), P("y^2 + x"), 1) == UPoly(Number(9)));
  CHECK_THROWS(bp::resultant(BiPoly(), BiPoly(), 1));
}

TEST_CASE("resultant matches the Sylvester determinant") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 15; ++trial) {
    BiPoly p = random_poly(rng, 1 + trial % 3), q = random_poly(rng, 1 + (trial / 3) % 3);
    // make leading y-coefficients vary with x sometimes
    if (trial % 2) p = p + BiPoly::monomial(Number(1), 1, p.degree(1));
    UPoly r = bp::resultant(p, q, 1);
    for (long x0 : {-2L, 0L, 1L, 3L}) CHECK(r.eval(Number(x0)) == Number(sylvester_at(p, q, x0)));
  }
}

TEST_CASE("resultant vanishing and multiplicativity") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 8; ++trial) {
    BiPoly g = random_poly(rng, 1), a = random_poly(rng, 2), b = random_poly(rng, 1);
    CHECK(bp::resultant(g * a, g * b, 1).is_zero());
    BiPoly l1 = BiPoly::var(1) - Number(long(trial)) * BiPoly::var(0) - BiPoly(1);
    BiPoly l2 = BiPoly::var(1) - Number(long(trial + 1)) * BiPoly::var(0) + BiPoly(2);
    CHECK(!bp::resultant(l1, l2, 1).is_zero());
    BiPoly p = random_poly(rng, 2), q = random_poly(rng, 3), r = random_poly(rng, 2);
    CHECK(bp::resultant(p * q, r, 1) == bp::resultant(p, r, 1) * bp::resultant(q, r, 1));
  }
}

TEST_CASE("squarefree parts") {
  CHECK(bp::squarefree_part(P("y^2"), 1) == P("y"));
  CHECK(bp::squarefree_part(P("(y-x)^2*(y+x)"), 1) == P("(y-x)*(y+x)"));
  CHECK(bp::squarefree_part(P("y^2 + x*y + 1"), 1) == P("y^2 + x*y + 1"));
  CHECK(bp::squarefree_part(P("x^2*y")) == P("x*y"));
  CHECK(bp::gcd(P("(x*y + 1)*(y - x^2)"), P("(x*y + 1)*(y + 3)")) == P("x*y + 1"));
  CHECK(bp::gcd(P("x^2 - 1"), P("x*y + y")) == P("x + 1"));
}

TEST_CASE("monic normalization") {
  auto n1 = monic_normalize({P("x + x^2*y")});
  CHECK(n1.change.m[1] == 1);
  CHECK(n1.polys[0] == P("(x+y) + (x+y)^2*y"));
  CHECK(n1.polys[0].degree(1) == 3);
  auto n2 = monic_normalize({P("y^2 - x")});
  CHECK(n2.change.is_identity());
  CHECK(n2.polys[0] == P("y^2 - x"));
  auto n3 = monic_normalize({P("y"), P("x*y + 1")});
  CHECK(n3.polys[1] == P("y^2 + x*y + 1"));
  CHECK(n3.polys[0] == P("y"));
  CHECK(n1.change.describe("x", "y") == "x -> x + y, y -> y");
  // inverse round trip
  std::mt19937_64 rng(9);
  for (int i = 0; i < 10; ++i) {
    BiPoly p = random_poly(rng, 1 + i % 4) + BiPoly::monomial(Number(2), 1 + i % 4, 0);
    auto n = monic_normalize({p});
    CHECK(is_monic_in_second(n.polys[0]));
    CHECK(n.change.inverse().apply(n.scales[0] * n.polys[0]) == p);
  }
  CHECK_THROWS_AS(monic_normalize({P("3")}), DegenerateInput);
}

TEST_CASE("bivariate factorization") {
  auto f = bp::irreducible_factors(parse_polynomial("x^2 - y^2"));
  REQUIRE(f.size() == 2);
  CHECK(bp::irreducible_factors(parse_polynomial("y^2 - 2*x^2")).size() == 1);
  CHECK(bp::irreducible_factors(parse_polynomial("x^2*y^3")).size() == 2);
  CHECK(bp::irreducible_factors(parse_polynomial("x^2 + 1")).size() == 1);
  std::vector<std::string> parts = {"y^2 - x", "y - x^2", "x*y + 1", "x^3 + y^3 + 1", "x - 3", "y^2 + x^2 + 2*y"};
  for (std::size_t mask = 1; mask < (1u << parts.size()); mask += 5) {
    BiPoly prod(1);
    int count = 0;
    for (std::size_t i = 0; i < parts.size(); ++i)
      if (mask & (1u << i)) {
        prod = prod * parse_polynomial(parts[i]);
        ++count;
      }
    auto fs = bp::irreducible_factors(prod);
    CHECK(static_cast<int>(fs.size()) == count);
    BiPoly back(1);
    for (const auto& g : fs) back = back * g;
    BiPoly q;
    CHECK(bp::divide(prod, back, &q));
    CHECK(q.is_constant());
  }
}
