#include <doctest.h>

#include <algorithm>
#include <set>

#include "antibch/distance.hpp"
#include "antibch/error.hpp"

using namespace antibch;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

// Minimum weight of {m(x) g(x) : deg m < k}, multiplying out every message.
std::uint64_t brute_force_distance(const BchCode& c) {
  const SmallField gf(*c.generator.field());
  const auto& g = c.generator.coeffs();
  const std::uint64_t k = c.dimension;
  if (k == 0) return c.n + 1;
  std::uint64_t total = 1;
  for (std::uint64_t i = 0; i < k; ++i) total *= c.q;
  std::uint64_t best = c.n + 1;
  std::vector<std::uint32_t> msg(k, 0), word(c.n);
  for (std::uint64_t v = 1; v < total; ++v) {
    std::uint64_t t = v;
    for (std::uint64_t i = 0; i < k; ++i) {
      msg[i] = t % c.q;
      t /= c.q;
    }
    std::fill(word.begin(), word.end(), 0);
    for (std::uint64_t i = 0; i < k; ++i) {
      if (!msg[i]) continue;
      for (std::size_t j = 0; j < g.size(); ++j)
        word[i + j] = gf.a(word[i + j], gf.m(msg[i], static_cast<std::uint32_t>(g[j].value)));
    }
    best = std::min<std::uint64_t>(best, std::count_if(word.begin(), word.end(), [](auto x) { return x != 0; }));
  }
  return best;
}

}  // namespace

TEST_CASE("exhaustive distance") {
  CHECK(exhaustive_distance(build_code(3, 2, 3, 1)).distance == 5);
  CHECK(exhaustive_distance(build_code(4, 2, 7, 0)).distance == 12);
  const auto c = build_code(8, 2, 23, 0);
  CHECK(c.dimension == 4);
  const auto r = exhaustive_distance(c);
  CHECK(r.distance == 56);
  CHECK(r.witness.weight() == 56);
  CHECK_NOTHROW(verify_witness(c, r.witness));
  CHECK(code_of([] { exhaustive_distance(build_code(2, 4, 2, 1), 100); }) == ErrorCode::BudgetExceeded);
}

TEST_CASE("exhaustive agrees with multiplying out messages") {
  for (auto [q, m] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {4, 2}, {5, 2}, {3, 3}}) {
    const std::uint64_t n = checked_pow(q, m) + 1;
    for (std::uint64_t delta = 2; delta <= n; ++delta) {
      for (std::int64_t b : {0, 1, 3}) {
        const auto c = build_code(q, m, delta, b);
        if (projective_count(q, c.dimension) > 20000) continue;
        INFO("q=" << q << " m=" << m << " delta=" << delta << " b=" << b);
        const std::uint64_t want = brute_force_distance(c);
        if (c.dimension > 0) CHECK(exhaustive_distance(c).distance == want);
        const auto cert = certify(c);
        CHECK(cert.exact);
        CHECK(cert.lower == want);
      }
    }
  }
}

TEST_CASE("support search") {
  auto r = support_search(build_code(3, 3, 3, 0), 4);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->weight() == 4);
  r = support_search(build_code(5, 3, 3, 0), 4);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->weight() == 4);
  r = support_search(build_code(2, 4, 2, 1), 4);
  CHECK_FALSE(r.witness.has_value());
  CHECK(r.exhausted_through == 4);
  CHECK_FALSE(r.budget_stopped);
  // Agreement with exhaustive search below the true distance.
  for (auto [q, m, delta, b] : std::vector<std::tuple<std::uint64_t, std::uint32_t, std::uint64_t, std::int64_t>>{
           {2, 4, 3, 0}, {3, 2, 2, 1}, {4, 2, 4, 0}, {2, 5, 3, 1}, {3, 3, 5, 0}}) {
    const auto c = build_code(q, m, delta, b);
    const std::uint64_t d = exhaustive_distance(c).distance;
    const auto s = support_search(c, d);
    REQUIRE(s.witness.has_value());
    CHECK(s.witness->weight() == d);
    if (d > 2) CHECK_FALSE(support_search(c, d - 1).witness.has_value());
  }
}

TEST_CASE("constructed witnesses") {
  CHECK(witness_order_divides(build_code(2, 3, 3, 0), 1).weight() == 6);
  CHECK(witness_order_divides(build_code(2, 6, 5, 0), 2).weight() == 10);
  CHECK(witness_order_divides(build_code(4, 3, 5, 0), 1).weight() == 10);
  CHECK(code_of([] { witness_order_divides(build_code(2, 4, 3, 0), 1); }) == ErrorCode::HypothesisNotMet);

  for (auto [q, m] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{{3, 3}, {3, 4}, {9, 2}, {5, 3}})
    CHECK(witness_quadrinomial(build_code(q, m, 3, 0)).weight() == 4);
  CHECK(code_of([] { witness_quadrinomial(build_code(4, 2, 3, 0)); }) == ErrorCode::HypothesisNotMet);

  for (std::uint32_t m : {4, 6, 8}) CHECK(witness_binary_weight6(build_code(2, m, 3, 0)).weight() == 6);
  CHECK(code_of([] { witness_binary_weight6(build_code(2, 5, 3, 0)); }) == ErrorCode::HypothesisNotMet);

  CHECK(witness_fifth_roots(build_code(2, 6, 2, 1)).weight() == 5);
  CHECK(witness_fifth_roots(build_code(3, 2, 3, 1)).weight() == 5);
  CHECK(witness_fifth_roots(build_code(3, 6, 3, 1)).weight() == 5);
  CHECK(code_of([] { witness_fifth_roots(build_code(2, 4, 2, 1)); }) == ErrorCode::HypothesisNotMet);

  CHECK(witness_polynomial_divisor(build_code(3, 4, 4, 0), ternary_weight8_length82()).weight() == 8);
  CHECK(witness_polynomial_divisor(build_code(3, 4, 3, 1), ternary_weight6_length82()).weight() == 6);
  CHECK(witness_polynomial_divisor(build_code(3, 3, 4, 0), ternary_weight8_odd_m(28)).weight() == 8);
  // 1 + x does not vanish at beta^0 in odd characteristic.
  const SparsePoly bad{"one_plus_x", 82, {{0, 1}, {1, 1}}};
  CHECK(code_of([&] { witness_polynomial_divisor(build_code(3, 4, 3, 0), bad); }) == ErrorCode::RootCheckFailed);
}

TEST_CASE("witness verification rejects non-codewords") {
  const auto c = build_code(2, 4, 3, 0);
  Witness w = witness_binary_weight6(c);
  CHECK(satisfies_parity_checks(c, w));
  CHECK(divisible_by_generator(c, w));
  w.support.back() = (w.support.back() + 1) % c.n;
  std::sort(w.support.begin(), w.support.end());
  CHECK_FALSE(satisfies_parity_checks(c, w));
  CHECK(code_of([&] { verify_witness(c, w); }) == ErrorCode::RootCheckFailed);
}

TEST_CASE("certify") {
  auto exact = [](std::uint64_t q, std::uint32_t m, std::uint64_t delta, std::int64_t b) {
    const auto cert = certify(build_code(q, m, delta, b));
    CHECK(cert.lower <= cert.upper.value_or(cert.n + 1));
    REQUIRE(cert.exact);
    if (cert.witness) CHECK(cert.witness->weight() == cert.lower);
    return cert.lower;
  };
  CHECK(exact(3, 3, 4, 0) == 8);
  CHECK(exact(2, 9, 9, 0) == 18);
  CHECK(exact(7, 2, 18, 0) == 34);
  // d of C(q, q^m + 1, 2, 1) by the parity of q and m.
  CHECK(exact(3, 3, 2, 1) == 2);
  CHECK(exact(5, 2, 2, 1) == 2);
  CHECK(exact(2, 3, 2, 1) == 3);
  CHECK(exact(2, 5, 2, 1) == 3);
  CHECK(exact(4, 2, 2, 1) == 4);
  CHECK(exact(8, 2, 2, 1) == 4);
  CHECK(exact(2, 6, 2, 1) == 5);
  CHECK(exact(2, 4, 2, 1) == 5);

  const auto zero = certify(build_code(2, 2, 5, 0));
  CHECK(zero.dimension == 0);
  CHECK(zero.lower == 6);
  CHECK(zero.exact);
  CHECK(zero.upper == 6);
  CHECK_FALSE(zero.witness.has_value());

  // With searches disabled only the bounds remain.
  CertifyOptions bare;
  bare.use_witnesses = bare.use_symmetric = bare.use_exhaustive = bare.use_support = false;
  const auto open = certify(build_code(3, 3, 4, 0), bare);
  CHECK_FALSE(open.exact);
  CHECK(open.lower == 8);
  CHECK_FALSE(open.upper.has_value());
  CHECK(std::any_of(open.lower_rules.begin(), open.lower_rules.end(),
                    [](const std::string& r) { return r.rfind("symmetric_window", 0) == 0; }));
}
