#include <algorithm>
#include <functional>

#include "antibch/distance.hpp"
#include "antibch/error.hpp"
#include "antibch/esp.hpp"

namespace antibch {

namespace {

bool same_code(const BchCode& code, std::uint64_t delta, std::int64_t b) {
  if (delta < 2 || delta > code.n) return false;
  return defining_set(code.q, code.m, delta, b) == code.defining_set;
}

struct Lower {
  std::uint64_t value = 0;
  std::vector<std::string> rules;
  void add(const std::string& rule, std::uint64_t v) {
    rules.push_back(rule + "=" + std::to_string(v));
    value = std::max(value, v);
  }
};

// Published lower bounds for narrow-sense codes with small designed distance.
void family_bounds(const BchCode& code, Lower& lower) {
  const std::uint64_t q = code.q;
  const std::uint32_t m = code.m;
  if (q == 2 && m > 3 && m % 2 == 0 && same_code(code, 2, 1)) lower.add("binary_narrow_delta2_even_m", 5);
  if (q % 2 == 0 && q > 2 && m > 3 && m % 2 == 0 && same_code(code, 2, 1)) lower.add("char2_narrow_delta2_even_m", 4);
  if (q == 3 && m % 2 == 0 && same_code(code, 3, 1)) {
    lower.add("ternary_narrow_delta3_even_m", 5);
    if (m % 4 == 0) lower.add("ternary_narrow_delta3_m_0_mod_4", 6);
  }
}

// Lengths q+1: sigma_{eta+w, eta} != 0 on U_{q+1} for w < W gives d >= eta + W.
void esp_bound(const BchCode& code, const Budgets& budgets, Lower& lower) {
  if (code.m != 1 || code.b != 1) return;
  const std::uint64_t eta = code.delta - 1;
  if (code.q <= 2 * eta) return;
  std::uint64_t w = 1;
  for (; eta + w <= code.n; ++w) {
    if (binomial_saturating(code.q + 1, eta + w) > budgets.support_leaves) break;
    if (!esp_distance_condition(code.q, eta, w, budgets.support_leaves)) break;
  }
  if (w > 1) lower.add("esp_nonvanishing", eta + w);
}

}  // namespace

DistanceCertificate certify(const BchCode& code, const CertifyOptions& opt) {
  DistanceCertificate cert;
  cert.q = code.q;
  cert.m = code.m;
  cert.n = code.n;
  cert.delta = code.delta;
  cert.b = code.b;
  cert.dimension = code.dimension;
  cert.budgets = opt.budgets;
  if (code.dimension == 0) {
    cert.lower = code.n + 1;
    cert.lower_rules = {"zero_code"};
    // No nonzero codeword; n + 1 by convention, so both bounds are that value.
    cert.upper = code.n + 1;
    cert.exact = true;
    return cert;
  }
  const SmallField& gf = code.tower->small_tables();

  Lower lower;
  const BoundReport br = bound_report(code);
  lower.add("bch_bound", br.bch_bound);
  for (const auto& e : br.window_bounds) lower.add(e.rule, e.value);
  if (opt.use_family_rules) {
    family_bounds(code, lower);
    esp_bound(code, opt.budgets, lower);
  }

  std::optional<Witness> best;
  auto consider = [&](const Witness& w) {
    if (!best || witness_before(gf, w, *best)) best = w;
  };
  auto attempt = [&](const std::function<Witness()>& make) {
    try {
      consider(make());
    } catch (const Error& e) {
      if (e.code() == ErrorCode::Internal) throw;
    }
  };
  auto exact = [&] { return best && best->weight() <= lower.value; };

  if (opt.use_witnesses) {
    attempt([&] { return witness_subgroup(code); });
    for (std::uint32_t l0 = 1; l0 <= code.m; ++l0)
      if (code.m % l0 == 0) attempt([&] { return witness_order_divides(code, l0); });
    attempt([&] { return witness_fifth_roots(code); });
    attempt([&] { return witness_quadrinomial(code); });
    if (code.q == 2 && code.m % 2 == 0 && !exact()) attempt([&] { return witness_binary_weight6(code); });
    if (code.q == 3) {
      if (code.n % 4 == 0) attempt([&] { return witness_polynomial_divisor(code, ternary_weight8_odd_m(code.n)); });
      if (code.n % 82 == 0) {
        attempt([&] { return witness_polynomial_divisor(code, ternary_weight8_length82()); });
        attempt([&] { return witness_polynomial_divisor(code, ternary_weight6_length82()); });
      }
    }
  }

  // Elimination on a k x n matrix; skipped when that alone would dominate.
  const bool small_elimination =
      code.dimension <= 4096 && code.dimension * code.dimension * code.n <= (std::uint64_t{1} << 32);
  if (!exact() && opt.use_symmetric && small_elimination) {
    std::uint64_t spent = 0;
    auto w = symmetric_subcode_search(code, opt.budgets.subcode_codewords, &spent);
    cert.codewords_enumerated += spent;
    if (w) consider(*w);
  }

  if (!exact() && opt.use_exhaustive && projective_count(code.q, code.dimension) <= opt.budgets.codewords) {
    auto res = exhaustive_distance(code, opt.budgets.codewords);
    cert.codewords_enumerated += res.enumerated;
    if (best && best->weight() < res.distance) throw Error(ErrorCode::Internal, "witness lighter than exhaustive minimum");
    lower.add("exhaustive", res.distance);
    if (!best || best->weight() > res.distance) best = res.witness;
  }

  if (opt.use_support) {
    // Settles every weight below the best upper bound that fits the budget;
    // also cross-checks published lower bounds when cheap.
    const std::uint64_t top = best ? best->weight() - 1 : code.n;
    std::uint64_t cost = 0;
    std::uint64_t reach = 1;
    for (std::uint64_t w = 2; w <= top; ++w) {
      const std::uint64_t c = support_search_cost(code, w);
      if (c > opt.budgets.support_leaves - std::min(opt.budgets.support_leaves, cost)) break;
      cost += c;
      reach = w;
    }
    const bool cross_check = exact() && reach == top;
    if ((!exact() || cross_check) && reach >= 2) {
      auto res = support_search(code, reach, opt.budgets.support_leaves);
      cert.support_leaves = res.leaves;
      cert.support_exhausted_through = res.exhausted_through;
      if (res.witness) {
        if (res.witness->weight() < lower.value)
          throw Error(ErrorCode::Internal, "support search found a word below a lower bound");
        lower.add("support_search", res.witness->weight());
        consider(*res.witness);
      } else if (res.exhausted_through >= 2) {
        lower.add("support_search", res.exhausted_through + 1);
      }
    }
  }

  cert.lower = lower.value;
  cert.lower_rules = lower.rules;
  if (best) {
    if (best->weight() < cert.lower) throw Error(ErrorCode::Internal, "witness below the lower bound");
    cert.upper = best->weight();
    cert.witness = normalized(gf, *best);
    cert.exact = *cert.upper == cert.lower;
  }
  return cert;
}

}  // namespace antibch
