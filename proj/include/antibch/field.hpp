#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace antibch {

// Field element: coordinate vector over GF(p) in the power basis of the
// defining modulus, packed as the base-p integer sum c_i p^i.
struct Elt {
  std::uint64_t value = 0;
  friend constexpr auto operator<=>(Elt, Elt) = default;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// GF(p^k) with the lexicographically smallest monic irreducible modulus and
// the smallest primitive element. Instances are cached per (p, k).
class Field {
 public:
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 40;
  static constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 20;

  static FieldPtr make(std::uint64_t p, std::uint32_t k);

  std::uint32_t p() const { return p_; }
  std::uint32_t k() const { return k_; }
  std::uint64_t order() const { return order_; }
  // Low-order first, monic, length k+1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  Elt primitive() const { return primitive_; }
  bool has_tables() const { return !exp_.empty(); }
  // Prime factors of order-1, ascending.
  const std::vector<std::uint64_t>& unit_group_primes() const { return unit_primes_; }

  Elt zero() const { return Elt{0}; }
  Elt one() const { return Elt{1}; }
  Elt from_int(std::int64_t v) const;
  Elt from_coeffs(std::span<const std::uint32_t> c) const;
  std::vector<std::uint32_t> coeffs(Elt a) const;

  Elt add(Elt a, Elt b) const;
  Elt sub(Elt a, Elt b) const;
  Elt neg(Elt a) const;
  Elt mul(Elt a, Elt b) const;
  Elt inv(Elt a) const;
  Elt div(Elt a, Elt b) const { return mul(a, inv(b)); }
  Elt pow(Elt a, std::uint64_t e) const;
  Elt scale(std::uint32_t c, Elt a) const;

  // Discrete log base primitive(); table fields only.
  std::uint64_t log(Elt a) const;
  Elt exp(std::uint64_t e) const;
  std::uint64_t multiplicative_order(Elt a) const;

  // Polynomial-path arithmetic, used to build tables and as a cross-check.
  Elt mul_poly(Elt a, Elt b) const;
  Elt inv_euclid(Elt a) const;

 private:
  Field(std::uint32_t p, std::uint32_t k);

  std::uint32_t p_ = 2;
  std::uint32_t k_ = 1;
  std::uint64_t order_ = 2;
  std::vector<std::uint32_t> modulus_;
  std::uint64_t modulus_bits_ = 0;  // p = 2 only
  std::vector<std::uint64_t> pow_p_;  // p^i, i <= k
  Elt primitive_{};
  std::vector<std::uint64_t> unit_primes_;
  std::vector<std::uint32_t> exp_;  // length 2(order-1)
  std::vector<std::uint32_t> log_;  // length order
};

Elt nth_root_of_unity(const Field& f, std::uint64_t n);
Elt trace(const Field& f, std::uint64_t sub_order, Elt x);
bool in_subfield(const Field& f, std::uint64_t sub_order, Elt x);

// Ring embedding GF(p^e) -> GF(p^k) sending the source modulus variable to
// the smallest root (in primitive-power order) of the source modulus.
class Embedding {
 public:
  Embedding(FieldPtr source, FieldPtr target);

  const FieldPtr& source() const { return source_; }
  const FieldPtr& target() const { return target_; }
  Elt map(Elt a) const { return image_[a.value]; }
  std::optional<Elt> pull_back(Elt b) const;
  Elt image_of_source_primitive() const { return map(source_->primitive()); }
  Elt image_of_generator() const { return root_; }

 private:
  FieldPtr source_;
  FieldPtr target_;
  Elt root_{};
  std::vector<Elt> image_;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> reverse_;
};

// Prime-power decomposition; nullopt if q is not a prime power.
std::optional<std::pair<std::uint64_t, std::uint32_t>> prime_power(std::uint64_t q);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
bool is_prime(std::uint64_t n);
std::uint64_t checked_pow(std::uint64_t base, std::uint64_t e);

// Dense GF(q) tables for the small coefficient field, q <= 256.
struct SmallField {
  std::uint32_t q = 0;
  std::vector<std::uint8_t> add, mul, neg, inv;
  explicit SmallField(const Field& f);
  std::uint8_t a(std::uint32_t x, std::uint32_t y) const { return add[x * q + y]; }
  std::uint8_t m(std::uint32_t x, std::uint32_t y) const { return mul[x * q + y]; }
  std::uint8_t s(std::uint32_t x, std::uint32_t y) const { return add[x * q + neg[y]]; }
};

}  // namespace antibch
