#include <algorithm>
#include <optional>
#include <tuple>

#include "antibch/distance.hpp"
#include "antibch/error.hpp"
#include "antibch/parallel.hpp"

namespace antibch {

namespace {

constexpr std::uint64_t kSaturated = std::uint64_t{1} << 62;

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 r = static_cast<unsigned __int128>(a) * b;
  return r > kSaturated ? kSaturated : static_cast<std::uint64_t>(r);
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > kSaturated) return kSaturated;
  }
  return static_cast<std::uint64_t>(r);
}

std::uint64_t hash_key(const Elt* v, std::size_t r) {
  std::uint64_t h = 0x243f6a8885a308d3ull;
  for (std::size_t i = 0; i < r; ++i) {
    h ^= v[i].value + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 0xbf58476d1ce4e5b9ull;
  }
  return h ^ (h >> 31);
}

struct Entry {
  std::uint64_t h;
  std::uint32_t j;
  std::uint32_t c;
  bool operator<(const Entry& o) const { return std::tie(h, j, c) < std::tie(o.h, o.j, o.c); }
};

}  // namespace

std::uint64_t support_search_cost(const BchCode& code, std::uint64_t weight) {
  if (weight < 2) return 0;
  std::uint64_t c = binomial(code.n - 2, weight - 2);
  for (std::uint64_t i = 0; i + 2 < weight; ++i) c = sat_mul(c, code.q - 1);
  return c;
}

SupportSearchResult support_search(const BchCode& code, std::uint64_t max_weight, std::uint64_t budget) {
  const Tower& T = *code.tower;
  const Field& B = *T.big;
  const SmallField& gf = T.small_tables();
  const std::uint64_t n = code.n, q = code.q;
  const std::vector<std::uint64_t>& reps = code.window_leaders;
  const std::size_t r = reps.size();
  SupportSearchResult res;
  if (max_weight < 2) return res;

  // Column syndromes scaled by every nonzero coefficient.
  std::vector<Elt> S(n * (q - 1) * r);
  auto col = [&](std::uint64_t j, std::uint32_t c) { return &S[(j * (q - 1) + (c - 1)) * r]; };
  for (std::uint64_t j = 0; j < n; ++j)
    for (std::uint32_t c = 1; c < q; ++c) {
      const Elt ec = T.emb->map(Elt{c});
      for (std::size_t t = 0; t < r; ++t)
        col(j, c)[t] = B.mul(ec, T.pow_beta(static_cast<std::uint64_t>(static_cast<unsigned __int128>(j) * reps[t] % n)));
    }
  // Entry (j, c) closes a partial sum P when P = -c S_j.
  std::vector<Entry> table;
  table.reserve((n - 1) * (q - 1));
  for (std::uint64_t j = 1; j < n; ++j)
    for (std::uint32_t c = 1; c < q; ++c)
      table.push_back({hash_key(col(j, gf.neg[c]), r), static_cast<std::uint32_t>(j), c});
  std::sort(table.begin(), table.end());

  std::uint64_t spent = 0;
  for (std::uint64_t w = 2; w <= max_weight && w <= n; ++w) {
    const std::uint64_t cost = support_search_cost(code, w);
    if (cost > budget - std::min(budget, spent)) {
      res.budget_stopped = true;
      break;
    }
    const std::uint64_t inner = w - 2;  // positions strictly between 0 and the closing one
    // Task a = largest inner position (or a single task when inner == 0).
    const std::uint64_t first = inner == 0 ? 0 : inner;
    const std::uint64_t tasks = inner == 0 ? 1 : (n >= 2 + first ? n - 1 - first : 0);
    struct Best {
      std::optional<Witness> w;
      std::uint64_t leaves = 0;
    };
    std::vector<Best> best(tasks);
    parallel_tasks(tasks, [&](std::uint64_t ti) {
      Best& out = best[ti];
      const std::uint64_t amax = inner == 0 ? 0 : first + ti;
      std::vector<Elt> partial((inner + 1) * r);
      std::vector<std::uint64_t> pos(inner);
      std::vector<std::uint32_t> cof(inner);
      for (std::size_t t = 0; t < r; ++t) partial[t] = col(0, 1)[t];
      auto leaf = [&](const Elt* P) {
        ++out.leaves;
        const std::uint64_t h = hash_key(P, r);
        auto it = std::lower_bound(table.begin(), table.end(), Entry{h, 0, 0});
        for (; it != table.end() && it->h == h; ++it) {
          if (it->j <= amax) continue;
          const Elt* K = col(it->j, gf.neg[it->c]);
          if (!std::equal(P, P + r, K)) continue;
          std::vector<std::pair<std::uint64_t, std::uint32_t>> terms{{0, 1}, {it->j, it->c}};
          for (std::uint64_t i = 0; i < inner; ++i) terms.emplace_back(pos[i], cof[i]);
          std::sort(terms.begin(), terms.end());
          Witness cand;
          cand.recipe = "support_search";
          for (auto& [x, c] : terms) {
            cand.support.push_back(x);
            cand.coeffs.push_back(c);
          }
          if (!out.w || witness_before(gf, cand, *out.w)) out.w = std::move(cand);
        }
      };
      // depth d picks pos[d] below bound, descending from amax.
      auto rec = [&](auto&& self, std::uint64_t d, std::uint64_t bound) -> void {
        const Elt* P = &partial[d * r];
        if (d == inner) {
          leaf(P);
          return;
        }
        const std::uint64_t lo = inner - d;  // room for the remaining picks in [1, x)
        const std::uint64_t hi = d == 0 ? amax : bound - 1;
        const std::uint64_t start = d == 0 ? amax : lo;
        for (std::uint64_t x = start; x <= hi; ++x) {
          pos[d] = x;
          for (std::uint32_t c = 1; c < q; ++c) {
            cof[d] = c;
            const Elt* C = col(x, c);
            Elt* N = &partial[(d + 1) * r];
            for (std::size_t t = 0; t < r; ++t) N[t] = B.add(P[t], C[t]);
            self(self, d + 1, x);
          }
        }
      };
      rec(rec, 0, 0);
    });
    std::optional<Witness> found;
    for (auto& b : best) {
      spent += b.leaves;
      if (b.w && (!found || witness_before(gf, *b.w, *found))) found = b.w;
    }
    if (found) {
      verify_witness(code, *found);
      res.witness = found;
      res.exhausted_through = w - 1;
      res.leaves = spent;
      return res;
    }
    res.exhausted_through = w;
  }
  res.leaves = spent;
  return res;
}

}  // namespace antibch
