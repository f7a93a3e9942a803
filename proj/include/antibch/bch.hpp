#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "antibch/cosets.hpp"
#include "antibch/poly.hpp"
#include "antibch/tower.hpp"

namespace antibch {

struct BetaWitness {
  std::uint32_t p = 0;
  std::uint32_t k = 0;
  std::vector<std::uint32_t> modulus;
  std::uint64_t exponent = 0;
};

// Antiprimitive BCH code C(q, q^m+1, delta, b) over GF(q).
struct BchCode {
  std::uint64_t q = 0;
  std::uint32_t m = 0;
  std::uint64_t n = 0;
  std::uint64_t delta = 0;
  std::uint64_t b = 0;  // reduced mod n
  std::vector<std::uint64_t> defining_set;
  std::vector<std::uint64_t> window_leaders;  // coset leaders met by the window
  Poly generator;
  std::uint64_t dimension = 0;
  bool lcd = false;
  BetaWitness beta;
  TowerPtr tower;
};

std::uint64_t reduce_mod(std::int64_t b, std::uint64_t n);

// Coset leaders of the window {b, ..., b+delta-2} mod n, ascending.
std::vector<std::uint64_t> window_leaders(const CosetReport& cosets, std::uint64_t delta, std::uint64_t b);
std::vector<std::uint64_t> defining_set(std::uint64_t q, std::uint32_t m, std::uint64_t delta, std::int64_t b);

BchCode build_code(std::uint64_t q, std::uint32_t m, std::uint64_t delta, std::int64_t b);

// Closed-form dimension for b = 0 or b = 1 inside the known ranges.
std::uint64_t dimension_formula(std::uint64_t q, std::uint32_t m, std::uint64_t delta, std::int64_t b);

// 1 + longest cyclic run of consecutive residues in the defining set;
// n + 1 when the defining set is all of Z_n.
std::uint64_t bch_bound(const BchCode& code);
std::uint64_t longest_cyclic_run(const std::vector<std::uint64_t>& set, std::uint64_t n);

struct BoundEntry {
  std::string rule;
  std::uint64_t value = 0;
};

struct BoundReport {
  std::uint64_t bch_bound = 0;
  std::vector<BoundEntry> window_bounds;
  std::uint64_t best_lower = 0;
};

BoundReport bound_report(const BchCode& code);

struct EqualityClaim {
  std::uint64_t delta_lhs = 0, b_lhs = 0;
  std::uint64_t delta_rhs = 0, b_rhs = 0;
  bool holds = false;
};

// Code equalities implied by delta = 1 mod q (b = 0) or delta = 1-b mod q
// (b != 0), each checked by comparing defining sets.
std::vector<EqualityClaim> structural_equalities(std::uint64_t q, std::uint32_t m, std::uint64_t delta,
                                                 std::int64_t b);
std::vector<EqualityClaim> structural_equalities(const CosetReport& cosets, std::uint64_t delta, std::uint64_t b);

}  // namespace antibch
