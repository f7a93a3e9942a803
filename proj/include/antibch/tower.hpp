#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "antibch/field.hpp"
#include "antibch/poly.hpp"

namespace antibch {

// GF(q) inside GF(q^(2m)) together with a primitive (q^m+1)-th root of unity.
struct Tower {
  std::uint64_t q = 0;
  std::uint32_t m = 0;
  std::uint64_t n = 0;
  std::uint32_t p = 0;
  std::uint32_t e = 0;  // q = p^e
  FieldPtr small;
  FieldPtr big;
  std::shared_ptr<const Embedding> emb;
  std::shared_ptr<const SmallField> gf;  // null when q > 256
  Elt beta{};
  std::uint64_t beta_exponent = 0;  // beta = primitive^beta_exponent
  std::vector<Elt> beta_pow;        // beta^i for 0 <= i < n

  Elt pow_beta(std::uint64_t i) const { return beta_pow[i % n]; }
  // i with beta^i == x, if x is an n-th root of unity.
  std::optional<std::uint64_t> unit_index(Elt x) const;
  const SmallField& small_tables() const;

  static std::shared_ptr<const Tower> make(std::uint64_t q, std::uint32_t m);

 private:
  std::vector<std::pair<std::uint64_t, std::uint32_t>> index_;
};

using TowerPtr = std::shared_ptr<const Tower>;

// Product of (x - beta^j) over the q-cyclotomic coset of s modulo n, pulled
// back to the embedding's source field.
Poly minimal_polynomial(const Embedding& emb, Elt beta, std::uint64_t s, std::uint64_t n, std::uint64_t q);

// Product of the distinct minimal polynomials of beta^t, t in {b, ..., b+delta-2} mod n.
Poly lcm_minimal_polynomials(std::uint64_t q, std::uint32_t m, std::uint64_t n, std::int64_t b, std::uint64_t delta);

}  // namespace antibch
