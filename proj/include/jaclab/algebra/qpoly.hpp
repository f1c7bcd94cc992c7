#pragma once

// Dense univariate polynomials over Q and Z, coefficients stored low degree first.
// These back the number-field arithmetic and the factorization routines; the
// general-purpose polynomial types (UPoly, BiPoly) sit on top of Number.

#include <gmpxx.h>

#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace jaclab {

using Rational = mpq_class;
using Integer = mpz_class;
using QPoly = std::vector<Rational>;
using ZPoly = std::vector<Integer>;

std::string to_string(const Rational& r);
/// Parses "p" or "p/q"; throws std::invalid_argument on malformed input or q == 0.
Rational rational_from_string(const std::string& s);

namespace qp {

void trim(QPoly& p);
int degree(const QPoly& p);  // -1 for the zero polynomial
const Rational& lead(const QPoly& p);
bool is_zero(const QPoly& p);

QPoly add(const QPoly& a, const QPoly& b);
QPoly sub(const QPoly& a, const QPoly& b);
QPoly mul(const QPoly& a, const QPoly& b);
QPoly scale(const QPoly& a, const Rational& c);
QPoly neg(const QPoly& a);
/// Quotient and remainder; b must be nonzero.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
QPoly rem(const QPoly& a, const QPoly& b);
QPoly monic(const QPoly& a);
QPoly gcd(const QPoly& a, const QPoly& b);  // monic, gcd(0,0) = 0
/// Returns (g, s, t) with s*a + t*b = g monic.
std::tuple<QPoly, QPoly, QPoly> ext_gcd(const QPoly& a, const QPoly& b);
QPoly derivative(const QPoly& a);
Rational eval(const QPoly& a, const Rational& x);
/// a(b(x)) reduced modulo m when m is nonempty.
QPoly compose(const QPoly& a, const QPoly& b, const QPoly& m = {});
QPoly mulmod(const QPoly& a, const QPoly& b, const QPoly& m);
/// Inverse of a modulo m; requires gcd(a, m) = 1.
QPoly invmod(const QPoly& a, const QPoly& m);
QPoly pow(const QPoly& a, unsigned e);
QPoly squarefree_part(const QPoly& a);
bool is_squarefree(const QPoly& a);
QPoly monomial(const Rational& c, int k);

/// Scales to an integer polynomial with coprime coefficients and positive leading coefficient.
ZPoly primitive_integer(const QPoly& a);
QPoly from_integer(const ZPoly& a);

std::string render(const QPoly& a, const std::string& var);

}  // namespace qp

namespace zp {
void trim(ZPoly& p);
int degree(const ZPoly& p);
Integer content(const ZPoly& p);
ZPoly mul(const ZPoly& a, const ZPoly& b);
/// Exact division by a monic-or-not divisor; returns false when b does not divide a over Z.
bool divides(const ZPoly& b, const ZPoly& a, ZPoly* quotient);
}  // namespace zp

}  // namespace jaclab
