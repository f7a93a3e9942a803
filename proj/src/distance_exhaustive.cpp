#include <algorithm>

#include "antibch/distance.hpp"
#include "antibch/error.hpp"
#include "antibch/parallel.hpp"

namespace antibch {

std::uint64_t projective_count(std::uint64_t q, std::uint64_t k) {
  constexpr std::uint64_t kCap = std::uint64_t{1} << 63;
  if (k == 0) return 0;
  std::uint64_t total = 0, term = 1;  // sum_{i<k} q^i
  for (std::uint64_t i = 0; i < k; ++i) {
    total += term;
    if (total >= kCap) return kCap;
    if (i + 1 < k && term > kCap / q) return kCap;
    term *= q;
  }
  return total;
}

namespace {

struct Basis {
  std::vector<std::uint32_t> pos;
  std::vector<std::uint8_t> val;
};

struct TaskBest {
  std::uint64_t weight = ~std::uint64_t{0};
  Witness w;
  std::uint64_t enumerated = 0;
};

Witness to_witness(const std::vector<std::uint8_t>& cw) {
  Witness w;
  for (std::size_t i = 0; i < cw.size(); ++i) {
    if (cw[i]) {
      w.support.push_back(i);
      w.coeffs.push_back(cw[i]);
    }
  }
  return w;
}

}  // namespace

SpanSearchResult min_weight_of_span(const SmallField& gf, std::uint32_t p, std::uint32_t e, std::uint64_t n,
                                    const std::vector<SparseRow>& rows, std::uint64_t budget) {
  const std::uint64_t q = gf.q, k = rows.size();
  SpanSearchResult res;
  if (k == 0) return res;
  const std::uint64_t total = projective_count(q, k);
  if (total > budget)
    throw Error(ErrorCode::BudgetExceeded,
                std::to_string(total) + " codewords exceed the budget of " + std::to_string(budget));

  // basis[i*e + d] = x^d * rows[i], x^d being the d-th power-basis element of GF(q).
  std::vector<Basis> basis(k * e);
  for (std::uint64_t i = 0; i < k; ++i) {
    std::uint32_t xd = 1;
    for (std::uint32_t d = 0; d < e; ++d) {
      Basis& b = basis[i * e + d];
      b.pos = rows[i].pos;
      for (auto v : rows[i].val) b.val.push_back(gf.m(v, xd));
      xd *= p;
    }
  }

  struct Task {
    std::uint64_t lead, begin, end;
  };
  constexpr std::uint64_t kChunk = std::uint64_t{1} << 16;
  std::vector<Task> tasks;
  for (std::uint64_t j = 0; j < k; ++j) {
    std::uint64_t count = 1;
    for (std::uint64_t i = 0; i < (k - 1 - j) * e; ++i) count *= p;
    for (std::uint64_t s = 0; s < count; s += kChunk) tasks.push_back({j, s, std::min(count, s + kChunk)});
  }

  std::vector<TaskBest> best(tasks.size());
  parallel_tasks(tasks.size(), [&](std::uint64_t ti) {
    const Task& task = tasks[ti];
    const std::uint64_t digits = (k - 1 - task.lead) * e;
    const std::size_t off = (task.lead + 1) * e;  // basis index of digit 0
    std::vector<std::uint8_t> cw(n, 0);
    std::uint64_t weight = 0;
    auto add = [&](const Basis& b, std::uint8_t scale) {
      for (std::size_t t = 0; t < b.pos.size(); ++t) {
        std::uint8_t& x = cw[b.pos[t]];
        const std::uint8_t old = x;
        x = gf.a(x, scale == 1 ? b.val[t] : gf.m(b.val[t], scale));
        weight += (x != 0);
        weight -= (old != 0);
      }
    };
    add(basis[task.lead * e], 1);
    // Modular Gray code: digit i of g(t) is t_i - t_{i+1} mod p.
    {
      std::vector<std::uint32_t> td(digits + 1, 0);
      std::uint64_t t = task.begin;
      for (std::uint64_t i = 0; i < digits; ++i) {
        td[i] = static_cast<std::uint32_t>(t % p);
        t /= p;
      }
      for (std::uint64_t i = 0; i < digits; ++i) {
        const std::uint32_t g = (td[i] + p - td[i + 1]) % p;
        if (g) add(basis[off + i], static_cast<std::uint8_t>(g));
      }
    }
    TaskBest& tb = best[ti];
    auto consider = [&] {
      ++tb.enumerated;
      if (weight > tb.weight) return;
      Witness w = to_witness(cw);
      if (weight < tb.weight || witness_before(gf, w, tb.w)) {
        tb.weight = weight;
        tb.w = std::move(w);
      }
    };
    consider();
    for (std::uint64_t t = task.begin + 1; t < task.end; ++t) {
      std::uint64_t pos = 0, x = t;
      if (p == 2) {
        pos = static_cast<std::uint64_t>(__builtin_ctzll(x));
      } else {
        while (x % p == 0) {
          x /= p;
          ++pos;
        }
      }
      add(basis[off + pos], 1);
      consider();
    }
  });

  res.distance = ~std::uint64_t{0};
  for (auto& tb : best) {
    res.enumerated += tb.enumerated;
    if (tb.weight < res.distance || (tb.weight == res.distance && witness_before(gf, tb.w, res.witness))) {
      res.distance = tb.weight;
      res.witness = tb.w;
    }
  }
  res.witness = normalized(gf, std::move(res.witness));
  return res;
}

namespace {

std::vector<std::vector<std::uint8_t>> generator_matrix(const BchCode& code) {
  const auto& g = code.generator.coeffs();
  std::vector<std::vector<std::uint8_t>> G(code.dimension, std::vector<std::uint8_t>(code.n, 0));
  for (std::uint64_t i = 0; i < code.dimension; ++i)
    for (std::size_t j = 0; j < g.size(); ++j) G[i][i + j] = static_cast<std::uint8_t>(g[j].value);
  return G;
}

SparseRow sparse(const std::vector<std::uint8_t>& v) {
  SparseRow r;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i]) {
      r.pos.push_back(static_cast<std::uint32_t>(i));
      r.val.push_back(v[i]);
    }
  }
  return r;
}

// Basis of {u : u M = 0} for a k x n matrix M.
std::vector<std::vector<std::uint8_t>> left_null_space(const SmallField& gf,
                                                       std::vector<std::vector<std::uint8_t>> M) {
  const std::size_t k = M.size();
  if (k == 0) return {};
  const std::size_t n = M[0].size();
  std::vector<std::vector<std::uint8_t>> U(k, std::vector<std::uint8_t>(k, 0));
  for (std::size_t i = 0; i < k; ++i) U[i][i] = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < k; ++col) {
    std::size_t piv = rank;
    while (piv < k && M[piv][col] == 0) ++piv;
    if (piv == k) continue;
    std::swap(M[piv], M[rank]);
    std::swap(U[piv], U[rank]);
    const std::uint8_t inv = gf.inv[M[rank][col]];
    for (auto& x : M[rank]) x = gf.m(x, inv);
    for (auto& x : U[rank]) x = gf.m(x, inv);
    for (std::size_t r = 0; r < k; ++r) {
      if (r == rank || M[r][col] == 0) continue;
      const std::uint8_t f = gf.neg[M[r][col]];
      for (std::size_t c = 0; c < n; ++c) M[r][c] = gf.a(M[r][c], gf.m(f, M[rank][c]));
      for (std::size_t c = 0; c < k; ++c) U[r][c] = gf.a(U[r][c], gf.m(f, U[rank][c]));
    }
    ++rank;
  }
  return {U.begin() + static_cast<std::ptrdiff_t>(rank), U.end()};
}

}  // namespace

SpanSearchResult exhaustive_distance(const BchCode& code, std::uint64_t budget) {
  const SmallField& gf = code.tower->small_tables();
  std::vector<SparseRow> rows;
  const auto& g = code.generator.coeffs();
  for (std::uint64_t i = 0; i < code.dimension; ++i) {
    SparseRow r;
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (g[j].value) {
        r.pos.push_back(static_cast<std::uint32_t>(i + j));
        r.val.push_back(static_cast<std::uint8_t>(g[j].value));
      }
    }
    rows.push_back(std::move(r));
  }
  auto res = min_weight_of_span(gf, code.tower->p, code.tower->e, code.n, rows, budget);
  res.witness.recipe = "exhaustive";
  if (res.distance) verify_witness(code, res.witness);
  return res;
}

std::optional<Witness> symmetric_subcode_search(const BchCode& code, std::uint64_t budget,
                                                std::uint64_t* enumerated) {
  const SmallField& gf = code.tower->small_tables();
  const auto G = generator_matrix(code);
  const std::uint64_t n = code.n;
  std::optional<Witness> best;
  std::uint64_t spent = 0;
  std::vector<std::uint64_t> shifts{0};
  if (n % 2 == 0) shifts.push_back(1);
  std::vector<std::uint8_t> signs{1};
  if (code.tower->p != 2) signs.push_back(gf.neg[1]);
  for (auto s : shifts) {
    for (auto sign : signs) {
      std::vector<std::vector<std::uint8_t>> M(G.size(), std::vector<std::uint8_t>(n));
      for (std::size_t i = 0; i < G.size(); ++i)
        for (std::uint64_t c = 0; c < n; ++c)
          M[i][c] = gf.s(G[i][(s + n - c) % n], gf.m(sign, G[i][c]));
      auto U = left_null_space(gf, std::move(M));
      if (U.empty()) continue;
      const std::uint64_t cost = projective_count(gf.q, U.size());
      if (cost > budget - std::min(budget, spent)) continue;
      std::vector<SparseRow> rows;
      for (const auto& u : U) {
        std::vector<std::uint8_t> v(n, 0);
        for (std::size_t i = 0; i < u.size(); ++i) {
          if (!u[i]) continue;
          for (std::uint64_t c = 0; c < n; ++c)
            if (G[i][c]) v[c] = gf.a(v[c], gf.m(u[i], G[i][c]));
        }
        rows.push_back(sparse(v));
      }
      auto res = min_weight_of_span(gf, code.tower->p, code.tower->e, n, rows, budget - spent);
      spent += res.enumerated;
      if (!res.distance) continue;
      res.witness.recipe = "symmetric_subcode";
      if (!best || witness_before(gf, res.witness, *best)) best = res.witness;
    }
  }
  if (best) verify_witness(code, *best);
  if (enumerated) *enumerated = spent;
  return best;
}

}  // namespace antibch
