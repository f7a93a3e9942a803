#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "antibch/distance.hpp"
#include "antibch/json_io.hpp"

namespace antibch {

struct CaseResult {
  std::string id;
  std::string kind;
  bool pass = false;
  bool expected_divergence = false;
  std::string detail;
};

struct VerifyReport {
  std::string suite;
  std::vector<CaseResult> cases;
  bool ok() const;
};

// ANTIBCH_GOLDEN_PATH if set, else the copy in the source tree.
std::string default_golden_path();

// Suites: "paper-examples" (golden data file), "properties" (seeded
// randomized checks), "all".
VerifyReport run_verify(const std::string& suite, std::uint64_t seed = 7, const Budgets& budgets = {},
                        const std::string& golden_path = default_golden_path());

Json to_json(const VerifyReport& r);

}  // namespace antibch
