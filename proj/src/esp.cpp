#include "antibch/esp.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "antibch/error.hpp"
#include "antibch/parallel.hpp"
#include "antibch/tower.hpp"

namespace antibch {

std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k) {
  constexpr std::uint64_t kCap = std::uint64_t{1} << 62;
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > kCap) return kCap;
  }
  return static_cast<std::uint64_t>(r);
}

std::shared_ptr<const UnitCircle> UnitCircle::make(std::uint64_t q) {
  static std::mutex mu;
  static std::map<std::uint64_t, std::shared_ptr<const UnitCircle>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(q);
  if (it != cache.end()) return it->second;
  auto t = Tower::make(q, 1);
  auto u = std::make_shared<UnitCircle>();
  u->q = q;
  u->small = t->small;
  u->big = t->big;
  u->emb = t->emb;
  u->gamma = t->beta;
  u->points = t->beta_pow;
  cache.emplace(q, u);
  return u;
}

std::vector<Elt> esp_all(const Field& f, std::span<const Elt> values) {
  std::vector<Elt> e(values.size() + 1, f.zero());
  e[0] = f.one();
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t r = i + 1; r >= 1; --r) e[r] = f.add(e[r], f.mul(values[i], e[r - 1]));
  return e;
}

Elt esp(const Field& f, std::span<const Elt> values, std::int64_t r) {
  if (r < 0 || static_cast<std::size_t>(r) > values.size())
    throw Error(ErrorCode::ROutOfRange, "r must lie in [0, l]");
  return esp_all(f, values)[static_cast<std::size_t>(r)];
}

Elt complete_homogeneous(const Field& f, std::int64_t r, std::size_t l, std::span<const Elt> values) {
  if (r < 0) return f.zero();
  if (l > values.size()) throw Error(ErrorCode::InvalidArgument, "l exceeds the number of values");
  std::vector<Elt> h(static_cast<std::size_t>(r) + 1, f.zero());
  h[0] = f.one();
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t s = 1; s < h.size(); ++s) h[s] = f.add(h[s], f.mul(values[i], h[s - 1]));
  return h[static_cast<std::size_t>(r)];
}

namespace {

void require_distinct(std::span<const Elt> values) {
  std::vector<Elt> v(values.begin(), values.end());
  std::sort(v.begin(), v.end());
  if (std::adjacent_find(v.begin(), v.end()) != v.end()) throw Error(ErrorCode::RepeatedValue, "values must be distinct");
}

Elt determinant(const Field& f, std::vector<std::vector<Elt>> a) {
  const std::size_t m = a.size();
  Elt det = f.one();
  for (std::size_t c = 0; c < m; ++c) {
    std::size_t piv = c;
    while (piv < m && a[piv][c] == f.zero()) ++piv;
    if (piv == m) return f.zero();
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = f.neg(det);
    }
    det = f.mul(det, a[c][c]);
    const Elt inv = f.inv(a[c][c]);
    for (std::size_t r = c + 1; r < m; ++r) {
      if (a[r][c] == f.zero()) continue;
      const Elt factor = f.mul(a[r][c], inv);
      for (std::size_t j = c; j < m; ++j) a[r][j] = f.sub(a[r][j], f.mul(factor, a[c][j]));
    }
  }
  return det;
}

}  // namespace

Elt gen_vandermonde_det(const Field& f, std::span<const std::int64_t> exponents, std::span<const Elt> values) {
  if (exponents.size() != values.size()) throw Error(ErrorCode::InvalidArgument, "matrix must be square");
  require_distinct(values);
  std::vector<std::vector<Elt>> a(exponents.size(), std::vector<Elt>(values.size()));
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    for (std::size_t j = 0; j < values.size(); ++j) {
      const std::int64_t e = exponents[i];
      if (e < 0) {
        if (values[j] == f.zero()) throw Error(ErrorCode::InvalidArgument, "negative power of zero");
        a[i][j] = f.pow(f.inv(values[j]), static_cast<std::uint64_t>(-e));
      } else {
        a[i][j] = f.pow(values[j], static_cast<std::uint64_t>(e));
      }
    }
  }
  return determinant(f, std::move(a));
}

Elt vandermonde_det(const Field& f, std::span<const Elt> values) {
  std::vector<std::int64_t> ex(values.size());
  for (std::size_t i = 0; i < ex.size(); ++i) ex[i] = static_cast<std::int64_t>(i);
  return gen_vandermonde_det(f, ex, values);
}

Elt m_matrix_det(const Field& f, std::uint64_t eta, std::uint64_t l, std::span<const Elt> values) {
  if (values.size() != eta + l) throw Error(ErrorCode::InvalidArgument, "need eta + l values");
  std::vector<std::int64_t> ex;
  for (std::int64_t i = -static_cast<std::int64_t>(l); i <= -1; ++i) ex.push_back(i);
  for (std::int64_t i = 1; i <= static_cast<std::int64_t>(eta); ++i) ex.push_back(i);
  return gen_vandermonde_det(f, ex, values);
}

namespace {

// Visits k-subsets of {0..npts-1} whose largest element is top, in colex
// order, with the running elementary symmetric functions of the chosen
// points. visit returns false to stop.
template <class Visit>
bool walk_subsets(const Field& F, const std::vector<Elt>& pts, std::uint64_t k, std::uint64_t top, Visit&& visit) {
  std::vector<std::vector<Elt>> e(k + 1, std::vector<Elt>(k + 1, F.zero()));
  e[0][0] = F.one();
  std::vector<std::uint32_t> chosen(k);
  auto push = [&](std::uint64_t d, std::uint64_t x) {
    const auto& prev = e[d];
    auto& cur = e[d + 1];
    cur[0] = F.one();
    for (std::uint64_t r = 1; r <= d + 1; ++r) cur[r] = F.add(prev[r], F.mul(pts[x], prev[r - 1]));
    chosen[d] = static_cast<std::uint32_t>(x);
  };
  auto rec = [&](auto&& self, std::uint64_t d, std::uint64_t bound) -> bool {
    if (d == k) return visit(chosen, e[k]);
    for (std::uint64_t x = k - 1 - d; x < bound; ++x) {
      push(d, x);
      if (!self(self, d + 1, x)) return false;
    }
    return true;
  };
  push(0, top);
  return rec(rec, 1, top);
}

}  // namespace

BlockSet block_set(std::uint64_t q, std::uint64_t k, std::uint64_t l, std::uint64_t budget) {
  auto uc = UnitCircle::make(q);
  const Field& F = *uc->big;
  if (k < 2 || k > q + 1) throw Error(ErrorCode::OutOfRange, "need 2 <= k <= q + 1");
  if (l < 1 || l >= k) throw Error(ErrorCode::ROutOfRange, "need 1 <= l < k");
  const std::uint64_t total = binomial_saturating(q + 1, k);
  if (total > budget) throw Error(ErrorCode::BudgetExceeded, std::to_string(total) + " subsets exceed the budget");
  BlockSet bs{q, k, l, {}, total};
  const std::uint64_t tasks = q + 1 - (k - 1);
  std::vector<std::vector<std::vector<std::uint32_t>>> found(tasks);
  parallel_tasks(tasks, [&](std::uint64_t ti) {
    walk_subsets(F, uc->points, k, k - 1 + ti, [&](const std::vector<std::uint32_t>& chosen, const std::vector<Elt>& e) {
      const bool z1 = e[k - l] == F.zero(), z2 = e[l] == F.zero();
      if (z1 != z2) throw Error(ErrorCode::Internal, "sigma_{k,k-l} and sigma_{k,l} disagree on a unit-circle subset");
      if (z1) found[ti].emplace_back(chosen.rbegin(), chosen.rend());
      return true;
    });
  });
  for (auto& v : found)
    for (auto& b : v) bs.blocks.push_back(std::move(b));
  return bs;
}

bool esp_distance_condition(std::uint64_t q, std::uint64_t eta, std::uint64_t w, std::uint64_t budget) {
  if (eta < 1 || w < 1) throw Error(ErrorCode::OutOfRange, "need eta >= 1 and w >= 1");
  if (q <= 2 * eta) throw Error(ErrorCode::HypothesisNotMet, "needs q > 2 eta");
  const std::uint64_t k = eta + w;
  if (k > q + 1) return true;  // no subsets of that size
  const std::uint64_t total = binomial_saturating(q + 1, k);
  if (total > budget) throw Error(ErrorCode::BudgetExceeded, std::to_string(total) + " subsets exceed the budget");
  auto uc = UnitCircle::make(q);
  const Field& F = *uc->big;
  for (std::uint64_t top = k - 1; top <= q; ++top) {
    const bool all_nonzero = walk_subsets(F, uc->points, k, top,
                                          [&](const std::vector<std::uint32_t>&, const std::vector<Elt>& e) {
                                            return e[eta] != F.zero();
                                          });
    if (!all_nonzero) return false;
  }
  return true;
}

DesignStatistic design_statistic(const BlockSet& bs, std::uint64_t t) {
  const std::uint64_t pts = bs.q + 1;
  if (t < 1 || t > bs.k) throw Error(ErrorCode::OutOfRange, "need 1 <= t <= k");
  const std::uint64_t total = binomial_saturating(pts, t);
  if (total > kDefaultSubsetBudget) throw Error(ErrorCode::BudgetExceeded, "too many t-subsets");
  std::vector<std::uint64_t> counts(total, 0);
  std::vector<std::uint32_t> idx(t);
  for (const auto& b : bs.blocks) {
    // all t-subsets of the block, ranked in the combinatorial number system
    auto rec = [&](auto&& self, std::uint64_t d, std::uint64_t from) -> void {
      if (d == t) {
        std::uint64_t rank = 0;
        for (std::uint64_t i = 0; i < t; ++i) rank += binomial_saturating(b[idx[i]], i + 1);
        ++counts[rank];
        return;
      }
      for (std::uint64_t x = from; x < b.size(); ++x) {
        idx[d] = static_cast<std::uint32_t>(x);
        self(self, d + 1, x + 1);
      }
    };
    rec(rec, 0, 0);
  }
  DesignStatistic s{t, *std::min_element(counts.begin(), counts.end()), *std::max_element(counts.begin(), counts.end())};
  return s;
}

ZetterbergCounts zetterberg_low_weight(std::uint64_t p, std::uint32_t m, std::uint64_t w_max, std::uint64_t budget) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, "p must be prime");
  auto T = Tower::make(p, m);
  const Field& B = *T->big;
  const std::uint64_t n = T->n;
  ZetterbergCounts out{p, m, n, std::vector<std::uint64_t>(w_max + 1, 0)};
  out.counts[0] = 1;
  // key -c beta^j for the closing position j with coefficient c
  std::vector<std::pair<std::uint64_t, std::uint32_t>> table;  // (value, j*(p-1) + c-1)
  auto term = [&](std::uint64_t j, std::uint32_t c) { return B.mul(T->emb->map(Elt{c}), T->pow_beta(j)); };
  for (std::uint64_t j = 1; j < n; ++j)
    for (std::uint32_t c = 1; c < p; ++c)
      table.emplace_back(B.neg(term(j, c)).value, static_cast<std::uint32_t>(j * (p - 1) + c - 1));
  std::sort(table.begin(), table.end());
  std::uint64_t spent = 0;
  for (std::uint64_t w = 2; w <= w_max && w <= n; ++w) {
    const std::uint64_t inner = w - 2;
    std::uint64_t cost = binomial_saturating(n - 2, inner);
    for (std::uint64_t i = 0; i < inner; ++i) cost = cost > (std::uint64_t{1} << 62) / p ? (std::uint64_t{1} << 62) : cost * (p - 1);
    if (cost > budget - std::min(budget, spent)) throw Error(ErrorCode::BudgetExceeded, "weight " + std::to_string(w) + " exceeds the budget");
    spent += cost;
    const std::uint64_t tasks = inner == 0 ? 1 : (n >= 2 + inner ? n - 1 - inner : 0);
    std::vector<std::uint64_t> hits(tasks, 0);
    parallel_tasks(tasks, [&](std::uint64_t ti) {
      const std::uint64_t amax = inner == 0 ? 0 : inner + ti;
      auto leaf = [&](Elt P) {
        auto lo = std::lower_bound(table.begin(), table.end(), std::make_pair(P.value, std::uint32_t{0}));
        for (; lo != table.end() && lo->first == P.value; ++lo)
          if (lo->second / (p - 1) > amax) ++hits[ti];
      };
      auto rec = [&](auto&& self, std::uint64_t d, std::uint64_t bound, Elt P) -> void {
        if (d == inner) {
          leaf(P);
          return;
        }
        const std::uint64_t start = d == 0 ? amax : inner - d;
        const std::uint64_t hi = d == 0 ? amax : bound - 1;
        for (std::uint64_t x = start; x <= hi; ++x)
          for (std::uint32_t c = 1; c < p; ++c) self(self, d + 1, x, B.add(P, term(x, c)));
      };
      rec(rec, 0, 0, B.one());
    });
    std::uint64_t z = 0;
    for (auto h : hits) z += h;
    // z words have c_0 = 1; scale by p-1 and spread over n cyclic shifts.
    const unsigned __int128 total = static_cast<unsigned __int128>(z) * (p - 1) * n;
    if (total % w != 0) throw Error(ErrorCode::Internal, "weight count not divisible by the weight");
    out.counts[w] = static_cast<std::uint64_t>(total / w);
  }
  return out;
}

}  // namespace antibch
