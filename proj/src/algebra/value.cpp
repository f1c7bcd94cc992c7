#include "jaclab/algebra/value.hpp"

#include "jaclab/algebra/factor_q.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace jaclab {

namespace {

// Root approximations are recomputed often for the same minimal polynomial.
const std::vector<Complex>& cached_roots(const QPoly& p) {
  static std::mutex mu;
  static std::map<std::vector<std::string>, std::vector<Complex>> cache;
  std::vector<std::string> key;
  for (const auto& c : p) key.push_back(to_string(c));
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, approximate_roots(p)).first;
  return it->second;
}

}  // namespace

Value Value::from_number(const Number& n) {
  if (n.is_rational()) return Value(n.to_rational());
  QPoly mp = minimal_polynomial(n);
  const auto& roots = cached_roots(mp);
  return Value(mp, static_cast<int>(nearest_root(roots, n.approx())));
}

std::vector<Value> Value::roots_of(const QPoly& irreducible) {
  QPoly mp = qp::monic(irreducible);
  std::vector<Value> out;
  for (int i = 0; i < qp::degree(mp); ++i) out.push_back(Value(mp, i));
  return out;
}

std::vector<Value> Value::all_roots(const QPoly& p) {
  std::vector<Value> out;
  if (qp::degree(p) < 1) return out;
  for (const auto& f : factor_rational(p))
    for (auto& v : roots_of(f.factor)) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

Rational Value::rational() const { return -minpoly_[0]; }

Complex Value::approx() const {
  if (is_rational()) return eval_complex(QPoly{rational()}, 0);
  return cached_roots(minpoly_).at(index_);
}

ComplexBox Value::box() const {
  if (is_rational()) {
    Rational r = rational();
    return {r, r, 0, 0};
  }
  return isolating_box(cached_roots(minpoly_), index_);
}

FieldPtr Value::field(const std::string& name) const {
  if (is_rational()) return nullptr;
  Field::Level level;
  level.name = name;
  level.minpoly = minpoly_;
  level.adjoined = QPoly{0, 1};
  level.defining = {};
  for (const auto& c : minpoly_) level.defining.push_back(QPoly{c});
  level.generator_value = approx();
  return std::make_shared<const Field>(std::move(level));
}

Number Value::number(const std::string& name) const {
  if (is_rational()) return Number(rational());
  return Number::generator(field(name));
}

std::string Value::describe(const std::string& var) const {
  if (is_rational()) return to_string(rational());
  return "root #" + std::to_string(index_) + " of " + qp::render(minpoly_, var);
}

bool operator<(const Value& a, const Value& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  if (a.is_rational()) return a.rational() < b.rational();
  if (a.minpoly_ != b.minpoly_) {
    for (int i = a.degree(); i >= 0; --i)
      if (a.minpoly_[i] != b.minpoly_[i]) return a.minpoly_[i] < b.minpoly_[i];
  }
  return a.index_ < b.index_;
}

std::vector<Value> merge_values(std::vector<Value> a, const std::vector<Value>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

bool contains(const std::vector<Value>& set, const Value& v) { return std::find(set.begin(), set.end(), v) != set.end(); }

Value value_near(const QPoly& minpoly, const Complex& z) {
  auto roots = Value::roots_of(minpoly);
  std::size_t best = 0;
  for (std::size_t i = 1; i < roots.size(); ++i)
    if (std::abs(roots[i].approx() - z) < std::abs(roots[best].approx() - z)) best = i;
  return roots[best];
}

Complex embed(const Number& a, const Complex& z) {
  if (a.is_rational()) return Complex(static_cast<long double>(a.to_rational().get_d()));
  return eval_complex(a.repr(), z);
}

std::vector<std::vector<Value>> conjugate_values(const std::vector<Number>& nums, const FieldPtr& field) {
  std::vector<QPoly> mps;
  std::vector<Number> lifted;
  for (const auto& n : nums) {
    mps.push_back(minimal_polynomial(n));
    lifted.push_back(field ? n.lift(field) : n);
  }
  std::vector<Complex> gens = field ? approximate_roots(field->minpoly()) : std::vector<Complex>{Complex(0)};
  std::vector<std::vector<Value>> out;
  for (const auto& z : gens) {
    std::vector<Value> row;
    for (std::size_t i = 0; i < nums.size(); ++i) row.push_back(value_near(mps[i], embed(lifted[i], z)));
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace jaclab
