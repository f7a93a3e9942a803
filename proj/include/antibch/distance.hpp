#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "antibch/bch.hpp"

namespace antibch {

// A codeword given by its support (ascending positions) and its GF(q)
// coefficients, encoded as integers sum c_i p^i.
struct Witness {
  std::vector<std::uint64_t> support;
  std::vector<std::uint32_t> coeffs;
  std::string recipe;
  std::uint64_t weight() const { return support.size(); }
};

// Order used for tie-breaking: weight, then colex support, then the
// coefficients scaled so the first one is 1.
bool witness_before(const SmallField& gf, const Witness& a, const Witness& b);
Witness normalized(const SmallField& gf, Witness w);

// Parity checks at the window's coset leaders.
bool satisfies_parity_checks(const BchCode& code, const Witness& w);
bool divisible_by_generator(const BchCode& code, const Witness& w);
// Throws RootCheckFailed unless both checks pass.
void verify_witness(const BchCode& code, const Witness& w);

struct Budgets {
  std::uint64_t codewords = std::uint64_t{1} << 26;  // projective points per exhaustive run
  std::uint64_t support_leaves = std::uint64_t{1} << 25;
  std::uint64_t subcode_codewords = std::uint64_t{1} << 24;
};

struct SparseRow {
  std::vector<std::uint32_t> pos;
  std::vector<std::uint8_t> val;
};

struct SpanSearchResult {
  std::uint64_t distance = 0;  // 0 when the span is {0}
  Witness witness;
  std::uint64_t enumerated = 0;
};

// Minimum weight over the span of linearly independent rows of length n,
// one representative per projective point.
SpanSearchResult min_weight_of_span(const SmallField& gf, std::uint32_t p, std::uint32_t e, std::uint64_t n,
                                    const std::vector<SparseRow>& rows, std::uint64_t budget);
std::uint64_t projective_count(std::uint64_t q, std::uint64_t k);  // saturates at 2^63

SpanSearchResult exhaustive_distance(const BchCode& code, std::uint64_t budget = Budgets{}.codewords);

struct SupportSearchResult {
  std::optional<Witness> witness;      // least weight found, if any
  std::uint64_t exhausted_through = 1; // no codeword of weight <= this
  std::uint64_t leaves = 0;
  bool budget_stopped = false;
};

// Leaves needed to settle weight w with position 0 fixed in the support.
std::uint64_t support_search_cost(const BchCode& code, std::uint64_t weight);
SupportSearchResult support_search(const BchCode& code, std::uint64_t max_weight,
                                   std::uint64_t budget = Budgets{}.support_leaves);

// Codeword constructions; each result is verified before it is returned.
Witness witness_subgroup(const BchCode& code);
Witness witness_order_divides(const BchCode& code, std::uint32_t l0);
Witness witness_fifth_roots(const BchCode& code);
Witness witness_quadrinomial(const BchCode& code);
Witness witness_binary_weight6(const BchCode& code);

// Sparse polynomial with prime-field coefficients whose roots are lifted
// to x -> x^(j n / period) for j coprime to period.
struct SparsePoly {
  std::string name;
  std::uint64_t period = 0;
  std::vector<std::pair<std::uint64_t, std::int64_t>> terms;
};
SparsePoly ternary_weight8_odd_m(std::uint64_t n);  // period n, n = 3^m + 1, m odd
SparsePoly ternary_weight8_length82();             // period 82
SparsePoly ternary_weight6_length82();             // period 82
Witness witness_polynomial_divisor(const BchCode& code, const SparsePoly& f);

// Minimum weight over subcodes fixed by a reflection i -> s - i (or
// negated by it, odd q). Empty when every subcode is over budget.
std::optional<Witness> symmetric_subcode_search(const BchCode& code, std::uint64_t budget,
                                                std::uint64_t* enumerated = nullptr);

struct CertifyOptions {
  Budgets budgets;
  bool use_family_rules = true;
  bool use_witnesses = true;
  bool use_symmetric = true;
  bool use_exhaustive = true;
  bool use_support = true;
};

struct DistanceCertificate {
  std::uint64_t q = 0;
  std::uint32_t m = 0;
  std::uint64_t n = 0;
  std::uint64_t delta = 0;
  std::uint64_t b = 0;
  std::uint64_t dimension = 0;
  std::uint64_t lower = 0;
  std::vector<std::string> lower_rules;
  std::optional<std::uint64_t> upper;
  std::optional<Witness> witness;
  bool exact = false;
  Budgets budgets;
  std::uint64_t codewords_enumerated = 0;
  std::uint64_t support_leaves = 0;
  std::uint64_t support_exhausted_through = 0;
};

DistanceCertificate certify(const BchCode& code, const CertifyOptions& options = {});

}  // namespace antibch
