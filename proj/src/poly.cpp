#include "antibch/poly.hpp"

#include <algorithm>

#include "antibch/error.hpp"

namespace antibch {

Poly::Poly(FieldPtr field, std::vector<Elt> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  normalize();
}

Poly Poly::monomial(FieldPtr field, std::size_t degree, Elt c) {
  std::vector<Elt> v(degree + 1);
  v[degree] = c;
  return Poly(std::move(field), std::move(v));
}

Poly Poly::one(FieldPtr field) { return Poly(field, {field->one()}); }

void Poly::normalize() {
  while (!c_.empty() && c_.back().value == 0) c_.pop_back();
}

Elt Poly::lead() const { return c_.empty() ? Elt{} : c_.back(); }

bool Poly::is_monic() const { return !c_.empty() && c_.back() == field_->one(); }

Poly Poly::operator+(const Poly& o) const {
  std::vector<Elt> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = field_->add(coeff(i), o.coeff(i));
  return Poly(field_, std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
  std::vector<Elt> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = field_->sub(coeff(i), o.coeff(i));
  return Poly(field_, std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
  if (c_.empty() || o.c_.empty()) return Poly(field_, {});
  std::vector<Elt> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].value == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = field_->add(r[i + j], field_->mul(c_[i], o.c_[j]));
  }
  return Poly(field_, std::move(r));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  if (d.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero polynomial");
  std::vector<Elt> r = c_;
  const std::size_t dd = d.c_.size() - 1;
  if (r.size() <= dd) return {Poly(field_, {}), *this};
  std::vector<Elt> q(r.size() - dd);
  const Elt li = field_->inv(d.lead());
  for (std::size_t i = r.size(); i-- > dd;) {
    if (r[i].value == 0) continue;
    const Elt c = field_->mul(r[i], li);
    q[i - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) r[i - dd + j] = field_->sub(r[i - dd + j], field_->mul(c, d.c_[j]));
  }
  r.resize(dd);
  return {Poly(field_, std::move(q)), Poly(field_, std::move(r))};
}

Elt Poly::eval(Elt x) const {
  Elt acc{};
  for (std::size_t i = c_.size(); i-- > 0;) acc = field_->add(field_->mul(acc, x), c_[i]);
  return acc;
}

Elt Poly::eval_in(const Embedding& emb, Elt x) const {
  if (emb.source() != field_) throw Error(ErrorCode::InvalidArgument, "embedding source differs from coefficient field");
  const Field& t = *emb.target();
  Elt acc{};
  for (std::size_t i = c_.size(); i-- > 0;) acc = t.add(t.mul(acc, x), emb.map(c_[i]));
  return acc;
}

Poly reciprocal(const Poly& f) {
  if (f.is_zero() || f.coeff(0).value == 0) throw Error(ErrorCode::ZeroConstantTerm, "reciprocal needs f(0) != 0");
  std::vector<Elt> r(f.coeffs().rbegin(), f.coeffs().rend());
  return Poly(f.field(), std::move(r));
}

bool is_self_reciprocal(const Poly& f) {
  const Poly r = reciprocal(f);
  const Field& F = *f.field();
  // Equal up to the scalar lead/f(0).
  const Elt s = F.div(f.lead(), f.coeff(0));
  for (std::size_t i = 0; i < f.coeffs().size(); ++i)
    if (F.mul(s, f.coeffs()[i]) != r.coeffs()[i]) return false;
  return true;
}

Poly x_pow_minus_one(const FieldPtr& field, std::uint64_t n) {
  std::vector<Elt> v(n + 1);
  v[0] = field->neg(field->one());
  v[n] = field->one();
  return Poly(field, std::move(v));
}

}  // namespace antibch
