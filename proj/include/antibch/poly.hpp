#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "antibch/field.hpp"

namespace antibch {

// Dense univariate polynomial, lowest degree first, no trailing zeros.
class Poly {
 public:
  Poly() = default;
  Poly(FieldPtr field, std::vector<Elt> coeffs);
  static Poly monomial(FieldPtr field, std::size_t degree, Elt c);
  static Poly one(FieldPtr field);

  const FieldPtr& field() const { return field_; }
  const std::vector<Elt>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  Elt lead() const;
  Elt coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Elt{}; }
  bool is_monic() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  bool operator==(const Poly& o) const { return c_ == o.c_ && field_ == o.field_; }

  std::pair<Poly, Poly> divmod(const Poly& d) const;
  Elt eval(Elt x) const;
  // Evaluate at x in the embedding's target field.
  Elt eval_in(const Embedding& emb, Elt x) const;

 private:
  void normalize();
  FieldPtr field_;
  std::vector<Elt> c_;
};

// x^deg(f) f(1/x); requires f(0) != 0.
Poly reciprocal(const Poly& f);
bool is_self_reciprocal(const Poly& f);
// x^n - 1 over the given field.
Poly x_pow_minus_one(const FieldPtr& field, std::uint64_t n);

}  // namespace antibch
