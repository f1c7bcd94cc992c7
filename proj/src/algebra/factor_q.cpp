#include "jaclab/algebra/factor_q.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>

namespace jaclab {

namespace {

// ---------------------------------------------------------------------------
// Polynomials over F_p, p < 2^31.

using Fp = std::vector<std::int64_t>;

void fp_trim(Fp& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int fp_deg(const Fp& a) { return static_cast<int>(a.size()) - 1; }

std::int64_t fp_inv(std::int64_t a, std::int64_t p) {
  std::int64_t r = 1, e = p - 2;
  a %= p;
  if (a < 0) a += p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

Fp fp_sub(const Fp& a, const Fp& b, std::int64_t p) {
  Fp r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] - b[i] + p) % p;
  fp_trim(r);
  return r;
}

Fp fp_mul(const Fp& a, const Fp& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  Fp r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  fp_trim(r);
  return r;
}

std::pair<Fp, Fp> fp_divmod(const Fp& a, const Fp& b, std::int64_t p) {
  Fp r(a);
  fp_trim(r);
  int db = fp_deg(b);
  if (fp_deg(r) < db) return {{}, r};
  Fp q(r.size() - b.size() + 1, 0);
  std::int64_t inv = fp_inv(b.back(), p);
  for (int k = fp_deg(r); k >= db; --k) {
    std::int64_t c = r[k] * inv % p;
    q[k - db] = c;
    if (!c) continue;
    for (int j = 0; j <= db; ++j) r[k - db + j] = ((r[k - db + j] - c * b[j]) % p + p) % p;
  }
  fp_trim(q);
  r.resize(db);
  fp_trim(r);
  return {q, r};
}

Fp fp_monic(const Fp& a, std::int64_t p) {
  if (a.empty()) return a;
  std::int64_t inv = fp_inv(a.back(), p);
  Fp r(a);
  for (auto& c : r) c = c * inv % p;
  return r;
}

Fp fp_gcd(Fp a, Fp b, std::int64_t p) {
  fp_trim(a);
  fp_trim(b);
  while (!b.empty()) {
    Fp r = fp_divmod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return fp_monic(a, p);
}

std::tuple<Fp, Fp, Fp> fp_ext_gcd(const Fp& a, const Fp& b, std::int64_t p) {
  Fp r0(a), r1(b), s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = fp_divmod(r0, r1, p);
    Fp s2 = fp_sub(s0, fp_mul(q, s1, p), p);
    Fp t2 = fp_sub(t0, fp_mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  std::int64_t inv = fp_inv(r0.back(), p);
  for (auto& c : r0) c = c * inv % p;
  for (auto& c : s0) c = c * inv % p;
  for (auto& c : t0) c = c * inv % p;
  return {r0, s0, t0};
}

Fp fp_derivative(const Fp& a, std::int64_t p) {
  if (a.size() <= 1) return {};
  Fp r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * static_cast<std::int64_t>(i % p) % p;
  fp_trim(r);
  return r;
}

Fp fp_powmod(const Fp& base, const Integer& e, const Fp& m, std::int64_t p) {
  Fp r{1}, b = fp_divmod(base, m, p).second;
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = fp_divmod(fp_mul(r, r, p), m, p).second;
    if (mpz_tstbit(e.get_mpz_t(), i)) r = fp_divmod(fp_mul(r, b, p), m, p).second;
  }
  return r;
}

Fp to_fp(const ZPoly& a, std::int64_t p) {
  Fp r(a.size());
  Integer pz(static_cast<long>(p));
  for (std::size_t i = 0; i < a.size(); ++i) {
    Integer c = a[i] % pz;
    if (c < 0) c += pz;
    r[i] = c.get_si();
  }
  fp_trim(r);
  return r;
}

// Distinct-degree factorization of a monic squarefree polynomial.
std::vector<std::pair<Fp, int>> distinct_degree(Fp f, std::int64_t p) {
  std::vector<std::pair<Fp, int>> out;
  Fp x{0, 1};
  Fp h = x;
  Integer pz(static_cast<long>(p));
  for (int i = 1; 2 * i <= fp_deg(f); ++i) {
    h = fp_powmod(h, pz, f, p);
    Fp g = fp_gcd(f, fp_sub(h, x, p), p);
    if (fp_deg(g) > 0) {
      out.emplace_back(g, i);
      f = fp_divmod(f, g, p).first;
      h = fp_divmod(h, f, p).second;
    }
  }
  if (fp_deg(f) > 0) out.emplace_back(f, fp_deg(f));
  return out;
}

// Cantor-Zassenhaus equal-degree splitting, p odd.
void equal_degree(const Fp& g, int d, std::int64_t p, std::mt19937_64& rng, std::vector<Fp>& out) {
  int n = fp_deg(g);
  if (n == d) {
    out.push_back(g);
    return;
  }
  Integer e;
  mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  std::uniform_int_distribution<std::int64_t> coef(0, p - 1);
  for (;;) {
    Fp a(n);
    for (auto& c : a) c = coef(rng);
    fp_trim(a);
    if (fp_deg(a) < 1) continue;
    Fp b = fp_powmod(a, e, g, p);
    Fp c = fp_gcd(fp_sub(b, Fp{1}, p), g, p);
    if (fp_deg(c) > 0 && fp_deg(c) < n) {
      equal_degree(c, d, p, rng, out);
      equal_degree(fp_divmod(g, c, p).first, d, p, rng, out);
      return;
    }
  }
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Polynomials over Z/(m) with big modulus, for Hensel lifting.

void zmod(ZPoly& a, const Integer& m) {
  for (auto& c : a) {
    c %= m;
    if (c < 0) c += m;
  }
  zp::trim(a);
}

ZPoly zm_add(const ZPoly& a, const ZPoly& b, const Integer& m) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  zmod(r, m);
  return r;
}

ZPoly zm_sub(const ZPoly& a, const ZPoly& b, const Integer& m) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  zmod(r, m);
  return r;
}

ZPoly zm_mul(const ZPoly& a, const ZPoly& b, const Integer& m) {
  ZPoly r = zp::mul(a, b);
  zmod(r, m);
  return r;
}

// Division by a monic polynomial modulo m.
std::pair<ZPoly, ZPoly> zm_divmod(const ZPoly& a, const ZPoly& b, const Integer& m) {
  ZPoly r(a);
  zmod(r, m);
  int db = zp::degree(b);
  if (zp::degree(r) < db) return {{}, r};
  ZPoly q(r.size() - b.size() + 1);
  for (int k = zp::degree(r); k >= db; --k) {
    Integer c = r[k] % m;
    if (c < 0) c += m;
    q[k - db] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) r[k - db + j] -= c * b[j];
    for (int j = 0; j <= db; ++j) {
      r[k - db + j] %= m;
    }
  }
  r.resize(db);
  zmod(r, m);
  zmod(q, m);
  return {q, r};
}

ZPoly from_fp(const Fp& a) {
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<long>(a[i]);
  return r;
}

// Quadratic Hensel lifting of f = g*h (g, h monic) from p to a modulus >= bound.
// Returns the lifted pair; `modulus` receives the final modulus.
std::pair<ZPoly, ZPoly> hensel_lift(const ZPoly& f, const Fp& g0, const Fp& h0, std::int64_t p, const Integer& bound,
                                    Integer& modulus) {
  auto [one, s0, t0] = fp_ext_gcd(g0, h0, p);
  (void)one;
  ZPoly g = from_fp(g0), h = from_fp(h0), s = from_fp(s0), t = from_fp(t0);
  Integer m(static_cast<long>(p));
  while (m < bound) {
    Integer m2 = m * m;
    ZPoly e = zm_sub(f, zm_mul(g, h, m2), m2);
    auto [q, r] = zm_divmod(zm_mul(s, e, m2), h, m2);
    ZPoly g1 = zm_add(zm_add(g, zm_mul(t, e, m2), m2), zm_mul(q, g, m2), m2);
    ZPoly h1 = zm_add(h, r, m2);
    ZPoly b = zm_sub(zm_add(zm_mul(s, g1, m2), zm_mul(t, h1, m2), m2), ZPoly{1}, m2);
    auto [c, d] = zm_divmod(zm_mul(s, b, m2), h1, m2);
    ZPoly s1 = zm_sub(s, d, m2);
    ZPoly t1 = zm_sub(zm_sub(t, zm_mul(t, b, m2), m2), zm_mul(c, g1, m2), m2);
    g = std::move(g1);
    h = std::move(h1);
    s = std::move(s1);
    t = std::move(t1);
    m = m2;
  }
  // keep monic leading coefficients explicit after reduction
  g.resize(g0.size());
  h.resize(h0.size());
  g.back() = 1;
  h.back() = 1;
  modulus = m;
  return {g, h};
}

ZPoly symmetric(const ZPoly& a, const Integer& m) {
  ZPoly r(a);
  Integer half = m / 2;
  for (auto& c : r) {
    c %= m;
    if (c < 0) c += m;
    if (c > half) c -= m;
  }
  zp::trim(r);
  return r;
}

// Factors a monic squarefree integer polynomial of degree >= 2.
std::vector<ZPoly> factor_monic_squarefree(const ZPoly& f) {
  int n = zp::degree(f);
  if (n <= 1) return {f};

  // pick the admissible prime with the fewest modular factors among the first few
  std::int64_t best_p = 0;
  std::size_t best_count = 0;
  int tried = 0;
  for (std::int64_t p = 3; tried < 6 && p < 100000; p += 2) {
    if (!is_prime(p)) continue;
    Fp fp = to_fp(f, p);
    if (fp_deg(fp) != n) continue;
    if (fp_deg(fp_gcd(fp, fp_derivative(fp, p), p)) > 0) continue;
    ++tried;
    std::size_t count = 0;
    for (auto& [g, d] : distinct_degree(fp, p)) count += static_cast<std::size_t>(fp_deg(g) / d);
    if (best_p == 0 || count < best_count) {
      best_p = p;
      best_count = count;
    }
    if (count == 1) break;
  }
  if (best_p == 0) throw std::runtime_error("no admissible prime for factorization");
  if (best_count == 1) return {f};

  std::int64_t p = best_p;
  std::mt19937_64 rng(0x5eedULL + static_cast<unsigned long long>(p));
  std::vector<Fp> modular;
  for (auto& [g, d] : distinct_degree(to_fp(f, p), p)) equal_degree(g, d, p, rng, modular);

  // Mignotte-style bound on coefficients of monic factors
  Integer norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  Integer norm;
  mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
  norm += 1;
  Integer bound = norm;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<unsigned long>(n + 1));

  std::vector<ZPoly> lifted;
  ZPoly rest = f;
  Integer modulus(static_cast<long>(p));
  for (std::size_t i = 0; i + 1 < modular.size(); ++i) {
    Fp others{1};
    for (std::size_t j = i + 1; j < modular.size(); ++j) others = fp_mul(others, modular[j], p);
    auto [g, h] = hensel_lift(rest, modular[i], others, p, bound, modulus);
    lifted.push_back(std::move(g));
    rest = std::move(h);
  }
  lifted.push_back(rest);

  // subset recombination
  std::vector<ZPoly> result;
  ZPoly remaining = f;
  std::vector<ZPoly> pool = lifted;
  for (std::size_t size = 1; 2 * size <= pool.size();) {
    bool found = false;
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      ZPoly prod{1};
      for (std::size_t i : idx) prod = zm_mul(prod, pool[i], modulus);
      ZPoly cand = symmetric(prod, modulus);
      ZPoly quot;
      if (!cand.empty() && zp::divides(cand, remaining, &quot)) {
        result.push_back(cand);
        remaining = quot;
        std::vector<ZPoly> next;
        for (std::size_t j = 0; j < pool.size(); ++j)
          if (std::find(idx.begin(), idx.end(), j) == idx.end()) next.push_back(pool[j]);
        pool = std::move(next);
        found = true;
        break;
      }
      // next combination
      std::size_t k = size;
      while (k > 0 && idx[k - 1] == pool.size() - size + k - 1) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++size;
  }
  if (zp::degree(remaining) > 0) result.push_back(remaining);
  return result;
}

bool factor_less(const QPoly& a, const QPoly& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

}  // namespace

std::vector<QFactor> squarefree_decomposition(const QPoly& p) {
  std::vector<QFactor> out;
  if (qp::degree(p) <= 0) return out;
  QPoly a = qp::monic(p);
  QPoly b = qp::derivative(a);
  QPoly c = qp::gcd(a, b);
  QPoly w = qp::divmod(a, c).first;
  QPoly y = qp::divmod(b, c).first;
  QPoly z = qp::sub(y, qp::derivative(w));
  for (int i = 1; qp::degree(w) > 0; ++i) {
    QPoly g = qp::gcd(w, z);
    if (qp::degree(g) > 0) out.push_back({g, i});
    w = qp::divmod(w, g).first;
    y = qp::divmod(z, g).first;
    z = qp::sub(y, qp::derivative(w));
  }
  return out;
}

std::vector<QFactor> factor_rational(const QPoly& p) {
  if (p.empty()) throw std::domain_error("cannot factor the zero polynomial");
  std::vector<QFactor> out;
  for (const auto& [s, mult] : squarefree_decomposition(p)) {
    if (qp::degree(s) == 1) {
      out.push_back({s, mult});
      continue;
    }
    ZPoly z = qp::primitive_integer(s);
    int n = zp::degree(z);
    Integer a = z.back();
    // g(x) = a^(n-1) f(x/a) is monic with integer coefficients
    ZPoly g(z.size());
    g[n] = 1;
    Integer pw = 1;
    for (int i = n - 1; i >= 0; --i) {
      g[i] = z[i] * pw;
      pw *= a;
    }
    for (const ZPoly& G : factor_monic_squarefree(g)) {
      // back-substitute x -> a x and take the primitive part
      ZPoly back(G.size());
      Integer ap = 1;
      for (std::size_t i = 0; i < G.size(); ++i) {
        back[i] = G[i] * ap;
        ap *= a;
      }
      out.push_back({qp::monic(qp::from_integer(back)), mult});
    }
  }
  std::sort(out.begin(), out.end(), [](const QFactor& x, const QFactor& y) {
    if (factor_less(x.factor, y.factor)) return true;
    if (factor_less(y.factor, x.factor)) return false;
    return x.multiplicity < y.multiplicity;
  });
  return out;
}

}  // namespace jaclab
