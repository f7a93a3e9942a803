#include <doctest.h>

#include <random>
#include <set>

#include "antibch/error.hpp"
#include "antibch/esp.hpp"

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

// Sum over r-subsets of products, by recursion on the last value.
Elt subset_sum(const Field& F, const std::vector<Elt>& v, std::size_t upto, std::int64_t r) {
  if (r == 0) return F.one();
  if (static_cast<std::int64_t>(upto) < r) return F.zero();
  const Elt with = F.mul(v[upto - 1], subset_sum(F, v, upto - 1, r - 1));
  return F.add(with, subset_sum(F, v, upto - 1, r));
}

// All k-subsets of {0..n-1} as ascending exponent lists, colex order.
std::vector<std::vector<std::uint32_t>> subsets(std::uint32_t n, std::uint32_t k) {
  std::vector<std::vector<std::uint32_t>> out;
  if (k == 0 || k > n) return out;
  std::vector<std::uint32_t> s(k);
  for (std::uint32_t i = 0; i < k; ++i) s[i] = i;
  while (true) {
    out.push_back(s);
    // Colex successor: bump the first entry that can move, reset those below it.
    std::uint32_t i = 0;
    while (i < k && s[i] + 1 == (i + 1 < k ? s[i + 1] : n)) ++i;
    if (i == k) break;
    ++s[i];
    for (std::uint32_t j = 0; j < i; ++j) s[j] = j;
  }
  return out;
}

std::vector<Elt> points_of(const UnitCircle& U, const std::vector<std::uint32_t>& s) {
  std::vector<Elt> v;
  for (auto i : s) v.push_back(U.points[i]);
  return v;
}

}  // namespace

TEST_CASE("unit circle") {
  for (std::uint64_t q : {2, 3, 4, 5, 8, 9}) {
    const auto U = UnitCircle::make(q);
    const Field& F = *U->big;
    REQUIRE(U->points.size() == q + 1);
    CHECK(F.pow(U->gamma, q + 1) == F.one());
    for (std::uint64_t i = 1; i <= q; ++i) CHECK(F.pow(U->gamma, i) != F.one());
    for (const Elt u : U->points) CHECK(F.pow(u, q) == F.inv(u));
  }
}

TEST_CASE("elementary symmetric polynomials") {
  const auto U = UnitCircle::make(8);
  const Field& F = *U->big;
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    std::vector<Elt> v;
    for (int i = 0; i < 6; ++i) v.push_back(U->points[rng() % 9]);
    const auto all = esp_all(F, v);
    for (std::int64_t r = 0; r <= 6; ++r) {
      CHECK(esp(F, v, r) == subset_sum(F, v, v.size(), r));
      CHECK(all[r] == esp(F, v, r));
    }
  }
  const std::vector<Elt> four(U->points.begin() + 1, U->points.begin() + 5);
  CHECK(esp(F, four, 2) == subset_sum(F, four, 4, 2));
  CHECK(esp(F, four, 0) == F.one());
  CHECK(code_of([&] { esp(F, four, 5); }) == ErrorCode::ROutOfRange);
  CHECK(code_of([&] { esp(F, four, -1); }) == ErrorCode::ROutOfRange);
  // theta of order eta + 1 dividing q + 1: sigma_eta of its powers vanishes.
  for (auto [q, eta] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{8, 2}, {5, 1}, {5, 2}, {11, 3}, {16, 16}}) {
    const auto W = UnitCircle::make(q);
    const Elt theta = W->big->pow(W->gamma, (q + 1) / (eta + 1));
    std::vector<Elt> v;
    for (std::uint64_t i = 0; i <= eta; ++i) v.push_back(W->big->pow(theta, i));
    CHECK(esp(*W->big, v, static_cast<std::int64_t>(eta)) == W->big->zero());
  }
}

TEST_CASE("complete homogeneous polynomials") {
  const auto F = Field::make(7, 1);
  const Elt a{2}, b{3}, c{5};
  const std::vector<Elt> v{a, b, c};
  CHECK(complete_homogeneous(*F, 0, 3, v) == F->one());
  CHECK(complete_homogeneous(*F, -2, 3, v) == F->zero());
  CHECK(complete_homogeneous(*F, 4, 1, v) == F->pow(a, 4));
  // a^2 + b^2 + c^2 + ab + ac + bc = 4 + 9 + 25 + 6 + 10 + 15 = 69 = 6 mod 7
  CHECK(complete_homogeneous(*F, 2, 3, v) == Elt{6});
  // Generating-function identity: sum_i (-1)^i sigma_i P_{r-i} = 0 for r >= 1.
  const auto U = UnitCircle::make(9);
  const Field& G = *U->big;
  const std::vector<Elt> w(U->points.begin(), U->points.begin() + 5);
  for (std::int64_t r = 1; r <= 8; ++r) {
    Elt s = G.zero();
    for (std::int64_t i = 0; i <= std::min<std::int64_t>(r, 5); ++i) {
      const Elt term = G.mul(esp(G, w, i), complete_homogeneous(G, r - i, 5, w));
      s = i % 2 ? G.sub(s, term) : G.add(s, term);
    }
    CHECK(s == G.zero());
  }
}

TEST_CASE("determinants") {
  const auto F = Field::make(5, 2);
  const Elt a = F->primitive(), b = F->pow(a, 7);
  // eta = l = 1: det [[1/a, 1/b], [a, b]] = (a + b)(b - a) / (ab)
  const std::vector<Elt> ab{a, b};
  const Elt want = F->div(F->mul(F->add(a, b), F->sub(b, a)), F->mul(a, b));
  CHECK(m_matrix_det(*F, 1, 1, ab) == want);
  const std::vector<std::int64_t> rows{-1, 1};
  CHECK(gen_vandermonde_det(*F, rows, ab) == want);
  CHECK(vandermonde_det(*F, ab) == F->sub(b, a));
  std::mt19937_64 rng(5);
  for (auto [eta, l] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{2, 1}, {1, 2}, {3, 2}, {2, 3}}) {
    for (int t = 0; t < 20; ++t) {
      std::set<std::uint64_t> seen;
      std::vector<Elt> x;
      while (x.size() < eta + l) {
        const Elt v{1 + rng() % (F->order() - 1)};
        if (seen.insert(v.value).second) x.push_back(v);
      }
      const std::int64_t k = static_cast<std::int64_t>(eta + l);
      const Elt lhs = F->mul(m_matrix_det(*F, eta, l, x), F->pow(esp(*F, x, k), l));
      CHECK(lhs == F->mul(esp(*F, x, static_cast<std::int64_t>(eta)), vandermonde_det(*F, x)));
    }
  }
  const std::vector<Elt> same{a, a};
  CHECK(code_of([&] { vandermonde_det(*F, same); }) == ErrorCode::RepeatedValue);
  CHECK(code_of([&] { m_matrix_det(*F, 1, 1, same); }) == ErrorCode::RepeatedValue);
}

TEST_CASE("block sets against direct enumeration") {
  for (auto [q, k, l] : std::vector<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>>{
           {4, 3, 1}, {4, 3, 2}, {8, 3, 1}, {8, 4, 1}, {8, 4, 2}, {7, 4, 2}, {9, 5, 2}, {5, 3, 1}}) {
    const auto U = UnitCircle::make(q);
    const Field& F = *U->big;
    std::vector<std::vector<std::uint32_t>> want;
    for (const auto& s : subsets(static_cast<std::uint32_t>(q + 1), static_cast<std::uint32_t>(k))) {
      const auto v = points_of(*U, s);
      const bool z = subset_sum(F, v, v.size(), static_cast<std::int64_t>(k - l)) == F.zero();
      // Conjugation u -> u^q = 1/u swaps sigma_r and sigma_{k-r} up to a unit.
      CHECK(z == (subset_sum(F, v, v.size(), static_cast<std::int64_t>(l)) == F.zero()));
      if (z) want.push_back(s);
    }
    const auto bs = block_set(q, k, l);
    INFO("q=" << q << " k=" << k << " l=" << l);
    CHECK(bs.blocks == want);
    CHECK(bs.subsets_checked == binomial_saturating(q + 1, k));
  }
  CHECK(block_set(8, 4, 1).blocks.empty());
  CHECK(block_set(16, 4, 1).blocks.empty());
  // {1, theta, theta^2} with theta of order 3 in U_9.
  const auto b = block_set(8, 3, 1);
  CHECK(std::find(b.blocks.begin(), b.blocks.end(), std::vector<std::uint32_t>{0, 3, 6}) != b.blocks.end());
  CHECK(code_of([] { block_set(4, 3, 3); }) == ErrorCode::ROutOfRange);
  CHECK(code_of([] { block_set(4, 7, 1); }) == ErrorCode::OutOfRange);
  CHECK(code_of([] { block_set(64, 8, 1, 1000); }) == ErrorCode::BudgetExceeded);
}

TEST_CASE("design statistic") {
  for (auto [q, k, l, t] : std::vector<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t, std::uint64_t>>{
           {8, 3, 1, 1}, {8, 3, 1, 2}, {7, 4, 2, 2}, {9, 5, 2, 2}}) {
    const auto bs = block_set(q, k, l);
    std::uint64_t lo = ~std::uint64_t{0}, hi = 0;
    for (const auto& s : subsets(static_cast<std::uint32_t>(q + 1), static_cast<std::uint32_t>(t))) {
      std::uint64_t c = 0;
      for (const auto& blk : bs.blocks) c += std::includes(blk.begin(), blk.end(), s.begin(), s.end());
      lo = std::min(lo, c);
      hi = std::max(hi, c);
    }
    const auto d = design_statistic(bs, t);
    CHECK(d.t == t);
    CHECK(d.min_count == lo);
    CHECK(d.max_count == hi);
  }
}

TEST_CASE("esp distance condition") {
  auto never_vanishes = [](std::uint64_t q, std::uint64_t eta, std::uint64_t w) {
    const auto U = UnitCircle::make(q);
    for (const auto& s : subsets(static_cast<std::uint32_t>(q + 1), static_cast<std::uint32_t>(eta + w))) {
      const auto v = points_of(*U, s);
      if (subset_sum(*U->big, v, v.size(), static_cast<std::int64_t>(eta)) == U->big->zero()) return false;
    }
    return true;
  };
  for (auto [q, eta, w] : std::vector<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>>{
           {8, 2, 1}, {8, 3, 1}, {8, 3, 2}, {7, 2, 1}, {7, 3, 1}, {9, 2, 2}, {11, 2, 1}, {16, 3, 1}}) {
    INFO("q=" << q << " eta=" << eta << " w=" << w);
    CHECK(esp_distance_condition(q, eta, w) == never_vanishes(q, eta, w));
  }
  CHECK_FALSE(esp_distance_condition(8, 2, 1));  // 3 | 9
  CHECK(esp_distance_condition(8, 3, 1));
  CHECK(esp_distance_condition(8, 3, 2));
  CHECK(code_of([] { esp_distance_condition(4, 2, 1); }) == ErrorCode::HypothesisNotMet);
}

TEST_CASE("Zetterberg low-weight counts") {
  CHECK(zetterberg_low_weight(2, 4, 3).counts.at(3) == 0);
  CHECK(zetterberg_low_weight(2, 5, 4).counts.at(4) == 0);
  CHECK(zetterberg_low_weight(3, 3, 3).counts.at(3) == 0);
  for (std::uint32_t m : {2, 3, 4, 5, 6}) CHECK(zetterberg_low_weight(2, m, 4).counts.at(4) == 0);
  // Binary counts are zero-sum subsets of U_{2^m+1}.
  for (std::uint32_t m : {3, 4, 5}) {
    const std::uint64_t q = std::uint64_t{1} << m;
    const auto U = UnitCircle::make(q);
    const auto z = zetterberg_low_weight(2, m, 5);
    for (std::uint32_t w = 1; w <= 5; ++w) {
      std::uint64_t c = 0;
      for (const auto& s : subsets(static_cast<std::uint32_t>(q + 1), w)) {
        Elt sum = U->big->zero();
        for (auto i : s) sum = U->big->add(sum, U->points[i]);
        c += sum == U->big->zero();
      }
      INFO("m=" << m << " w=" << w);
      CHECK(z.counts.at(w) == c);
    }
  }
  CHECK(zetterberg_low_weight(2, 3, 3).counts.at(3) == 3);  // cosets of the cube roots of unity
  CHECK(code_of([] { zetterberg_low_weight(4, 2, 3); }) == ErrorCode::NotPrime);
}
