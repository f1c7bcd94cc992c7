#include "jaclab/algebra/field.hpp"

#include <stdexcept>

namespace jaclab {

Field::Field(Level level) : level_(std::move(level)) {
  if (qp::degree(level_.minpoly) < 1) throw std::invalid_argument("field minimal polynomial must have degree >= 1");
  level_.minpoly = qp::monic(level_.minpoly);
  depth_ = level_.parent ? level_.parent->depth() + 1 : 1;
  if (level_.parent) {
    const Field& p = *level_.parent;
    for (int d = 1; d < depth_; ++d)
      ancestor_images_.push_back(qp::compose(p.ancestor_generator(d), level_.parent_generator, level_.minpoly));
  }
  ancestor_images_.push_back(QPoly{0, 1});
  if (degree() == 1) ancestor_images_.back() = qp::rem(QPoly{0, 1}, level_.minpoly);
}

ComplexBox Field::generator_box() const {
  auto roots = approximate_roots(level_.minpoly);
  return isolating_box(roots, nearest_root(roots, level_.generator_value));
}

bool Field::has_ancestor(const Field* other) const {
  for (const Field* f = this; f; f = f->parent().get())
    if (f == other) return true;
  return false;
}

FieldPtr common_field(const FieldPtr& a, const FieldPtr& b) {
  if (!a) return b;
  if (!b || a == b) return a;
  if (b->has_ancestor(a.get())) return b;
  if (a->has_ancestor(b.get())) return a;
  throw std::logic_error("numbers from unrelated tower branches cannot be combined");
}

Number::Number(FieldPtr field, QPoly repr) : field_(std::move(field)), repr_(std::move(repr)) {
  qp::trim(repr_);
  if (field_) repr_ = qp::rem(repr_, field_->minpoly());
  if (repr_.size() <= 1) field_.reset();
}

Number Number::generator(const FieldPtr& field) { return Number(field, QPoly{0, 1}); }

Rational Number::to_rational() const {
  if (!is_rational()) throw std::logic_error("algebraic number is not rational");
  return repr_.empty() ? Rational(0) : repr_[0];
}

Number Number::lift(const FieldPtr& target) const {
  if (!field_ || field_ == target) {
    Number r = *this;
    return r;
  }
  if (!target || !target->has_ancestor(field_.get())) throw std::logic_error("cannot lift number to a non-descendant field");
  return Number(target, qp::compose(repr_, target->ancestor_generator(field_->depth()), target->minpoly()));
}

namespace {

// Field of the result, with both operands expressed in it.
FieldPtr unify(const Number& a, const Number& b, QPoly& ra, QPoly& rb) {
  FieldPtr f = common_field(a.field(), b.field());
  ra = a.field() == f ? a.repr() : a.lift(f).repr();
  rb = b.field() == f ? b.repr() : b.lift(f).repr();
  return f;
}

}  // namespace

Number Number::operator-() const {
  Number r = *this;
  for (auto& c : r.repr_) c = -c;
  return r;
}

Number operator+(const Number& a, const Number& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  QPoly ra, rb;
  FieldPtr f = unify(a, b, ra, rb);
  return Number(f, qp::add(ra, rb));
}

Number operator-(const Number& a, const Number& b) {
  if (b.is_zero()) return a;
  QPoly ra, rb;
  FieldPtr f = unify(a, b, ra, rb);
  return Number(f, qp::sub(ra, rb));
}

Number operator*(const Number& a, const Number& b) {
  if (a.is_zero() || b.is_zero()) return Number();
  if (a.is_rational() && b.is_rational()) return Number(a.repr_[0] * b.repr_[0]);
  if (a.is_rational()) return Number(b.field_, qp::scale(b.repr_, a.repr_[0]));
  if (b.is_rational()) return Number(a.field_, qp::scale(a.repr_, b.repr_[0]));
  QPoly ra, rb;
  FieldPtr f = unify(a, b, ra, rb);
  return Number(f, qp::mul(ra, rb));
}

Number Number::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (is_rational()) return Number(1 / repr_[0]);
  return Number(field_, qp::invmod(repr_, field_->minpoly()));
}

Number operator/(const Number& a, const Number& b) {
  if (b.is_rational()) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    return a * Number(1 / b.repr_[0]);
  }
  return a * b.inverse();
}

bool operator==(const Number& a, const Number& b) {
  if (a.is_rational() && b.is_rational()) return a.repr_ == b.repr_;
  if (a.is_rational() != b.is_rational()) return false;
  QPoly ra, rb;
  unify(a, b, ra, rb);
  return ra == rb;
}

Complex Number::approx() const {
  if (!field_) return repr_.empty() ? Complex(0) : eval_complex(QPoly{repr_[0]}, 0);
  return eval_complex(repr_, field_->generator_value());
}

std::string Number::render() const {
  if (is_rational()) return to_string(to_rational());
  return "(" + qp::render(repr_, field_->name()) + ")";
}

QPoly minimal_polynomial(const Number& a) {
  if (a.is_rational()) return QPoly{-a.to_rational(), 1};
  const FieldPtr& f = a.field();
  int n = f->degree();
  // first linear dependency among 1, a, a^2, ... (row-reduced incrementally)
  std::vector<QPoly> basis;        // reduced vectors, each with a pivot
  std::vector<int> pivots;
  std::vector<QPoly> combos;       // expresses each basis vector in powers of a
  QPoly power{1};
  for (int k = 0; k <= n; ++k) {
    QPoly v(power);
    v.resize(n);
    QPoly combo = qp::monomial(Rational(1), k);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      Rational c = v[pivots[i]];
      if (c == 0) continue;
      for (int j = 0; j < n; ++j) v[j] -= c * basis[i][j];
      combo = qp::sub(combo, qp::scale(combos[i], c));
    }
    int piv = -1;
    for (int j = 0; j < n; ++j)
      if (v[j] != 0) {
        piv = j;
        break;
      }
    if (piv < 0) return qp::monic(combo);
    Rational inv = 1 / v[piv];
    for (auto& x : v) x *= inv;
    basis.push_back(v);
    pivots.push_back(piv);
    combos.push_back(qp::scale(combo, inv));
    power = qp::mulmod(power, a.repr(), f->minpoly());
  }
  throw std::logic_error("minimal polynomial search exceeded field degree");
}

}  // namespace jaclab
