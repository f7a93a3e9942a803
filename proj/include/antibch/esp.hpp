#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "antibch/field.hpp"

namespace antibch {

// U_{q+1} inside GF(q^2), enumerated as gamma^i for 0 <= i <= q.
struct UnitCircle {
  std::uint64_t q = 0;
  FieldPtr small;
  FieldPtr big;
  std::shared_ptr<const Embedding> emb;
  Elt gamma{};
  std::vector<Elt> points;

  static std::shared_ptr<const UnitCircle> make(std::uint64_t q);
};

// sigma_r(values): coefficient of x^(l-r) in prod (x + u_i).
Elt esp(const Field& f, std::span<const Elt> values, std::int64_t r);
// sigma_0 .. sigma_l in one pass.
std::vector<Elt> esp_all(const Field& f, std::span<const Elt> values);
// P_{r,l}: sum of all degree-r monomials in the first l values.
Elt complete_homogeneous(const Field& f, std::int64_t r, std::size_t l, std::span<const Elt> values);

// det [values_j^e] with one row per exponent (negative exponents allowed for
// nonzero values).
Elt gen_vandermonde_det(const Field& f, std::span<const std::int64_t> exponents, std::span<const Elt> values);
Elt vandermonde_det(const Field& f, std::span<const Elt> values);
// Rows u^-l, ..., u^-1, u^1, ..., u^eta on eta + l nonzero distinct values.
Elt m_matrix_det(const Field& f, std::uint64_t eta, std::uint64_t l, std::span<const Elt> values);

struct BlockSet {
  std::uint64_t q = 0, k = 0, l = 0;
  std::vector<std::vector<std::uint32_t>> blocks;  // exponents of gamma, ascending; colex order
  std::uint64_t subsets_checked = 0;
};

constexpr std::uint64_t kDefaultSubsetBudget = std::uint64_t{1} << 26;

// k-subsets of U_{q+1} with sigma_{k, k-l} = 0 (equivalently sigma_{k, l} = 0).
BlockSet block_set(std::uint64_t q, std::uint64_t k, std::uint64_t l, std::uint64_t budget = kDefaultSubsetBudget);

// True when sigma_{eta+w, eta} never vanishes on (eta+w)-subsets of U_{q+1}.
bool esp_distance_condition(std::uint64_t q, std::uint64_t eta, std::uint64_t w,
                            std::uint64_t budget = kDefaultSubsetBudget);

struct DesignStatistic {
  std::uint64_t t = 0;
  std::uint64_t min_count = 0, max_count = 0;
  bool is_design() const { return min_count == max_count; }
};
// Block counts through each t-subset of the q+1 points.
DesignStatistic design_statistic(const BlockSet& blocks, std::uint64_t t);

struct ZetterbergCounts {
  std::uint64_t p = 0;
  std::uint32_t m = 0;
  std::uint64_t n = 0;
  std::vector<std::uint64_t> counts;  // counts[i] = number of weight-i codewords, i <= w_max
};

// Low-weight counts of {c in GF(p)^n : sum c_j beta^j = 0}, n = p^m + 1.
ZetterbergCounts zetterberg_low_weight(std::uint64_t p, std::uint32_t m, std::uint64_t w_max,
                                       std::uint64_t budget = kDefaultSubsetBudget);

std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k);

}  // namespace antibch
