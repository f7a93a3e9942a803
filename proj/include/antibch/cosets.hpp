#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace antibch {

// Sorted q-cyclotomic coset of s modulo n.
std::vector<std::uint64_t> coset(std::uint64_t q, std::uint64_t n, std::uint64_t s);

struct CosetReport {
  std::uint64_t q = 0;
  std::uint32_t m = 0;
  std::uint64_t n = 0;
  std::vector<std::uint64_t> leaders;              // ascending
  std::map<std::uint64_t, std::uint64_t> sizes;    // leader -> |C_leader|
  std::vector<std::uint32_t> leader_of;            // index into leaders, per residue
};

constexpr std::uint64_t kDefaultCosetBudget = std::uint64_t{1} << 22;

// Partition of Z_n into q-cyclotomic cosets by orbit walking.
CosetReport cyclotomic_partition(std::uint64_t q, std::uint64_t n, std::uint64_t budget = kDefaultCosetBudget);
// Same for n = q^m + 1.
CosetReport leaders_brute_force(std::uint64_t q, std::uint32_t m, std::uint64_t budget = kDefaultCosetBudget);

enum class LeaderVerdict { Leader, ExcludedForm, RangeExceeded };

struct LeaderClassification {
  LeaderVerdict verdict = LeaderVerdict::Leader;
  // Filled for ExcludedForm: a = l*q^(m-i) + h.
  std::uint32_t i = 0;
  std::uint64_t l = 0;
  std::int64_t h = 0;
};

// Closed-form coset-leader test for q^m+1; valid for m >= 1.
LeaderClassification is_leader_closed_form(std::uint64_t q, std::uint32_t m, std::uint64_t a);
// Largest bound the closed form allows: a <= this value.
std::uint64_t closed_form_range(std::uint64_t q, std::uint32_t m);

// Four largest coset leaders modulo q^2+1, descending.
std::vector<std::uint64_t> largest_leaders_m2(std::uint64_t q);

// gcd(a^u + 1, a^v - 1) from the 2-adic valuations of u and v.
std::uint64_t gcd_special(std::uint64_t a, std::uint64_t u, std::uint64_t v);

std::string leader_verdict_name(LeaderVerdict v);

}  // namespace antibch
