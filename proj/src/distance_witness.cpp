#include <algorithm>
#include <numeric>

#include "antibch/distance.hpp"
#include "antibch/error.hpp"

namespace antibch {

Witness normalized(const SmallField& gf, Witness w) {
  if (w.coeffs.empty() || w.coeffs[0] == 1) return w;
  const std::uint8_t s = gf.inv[w.coeffs[0]];
  for (auto& c : w.coeffs) c = gf.m(c, s);
  return w;
}

bool witness_before(const SmallField& gf, const Witness& a, const Witness& b) {
  if (a.weight() != b.weight()) return a.weight() < b.weight();
  for (std::size_t i = a.support.size(); i-- > 0;)
    if (a.support[i] != b.support[i]) return a.support[i] < b.support[i];
  const Witness na = normalized(gf, a), nb = normalized(gf, b);
  return na.coeffs < nb.coeffs;
}

bool satisfies_parity_checks(const BchCode& code, const Witness& w) {
  const Tower& t = *code.tower;
  const Field& B = *t.big;
  for (auto s : code.window_leaders) {
    Elt acc = B.zero();
    for (std::size_t i = 0; i < w.support.size(); ++i) {
      const std::uint64_t e = static_cast<std::uint64_t>(static_cast<unsigned __int128>(w.support[i]) * s % code.n);
      acc = B.add(acc, B.mul(t.emb->map(Elt{w.coeffs[i]}), t.pow_beta(e)));
    }
    if (acc != B.zero()) return false;
  }
  return true;
}

bool divisible_by_generator(const BchCode& code, const Witness& w) {
  if (w.support.empty()) return true;
  std::vector<Elt> c(w.support.back() + 1);
  for (std::size_t i = 0; i < w.support.size(); ++i) c[w.support[i]] = Elt{w.coeffs[i]};
  return Poly(code.generator.field(), std::move(c)).divmod(code.generator).second.is_zero();
}

void verify_witness(const BchCode& code, const Witness& w) {
  if (w.support.empty()) throw Error(ErrorCode::RootCheckFailed, "empty witness");
  if (w.support.size() != w.coeffs.size()) throw Error(ErrorCode::Internal, "support/coefficient size mismatch");
  for (std::size_t i = 0; i < w.support.size(); ++i) {
    if (w.support[i] >= code.n || (i && w.support[i] <= w.support[i - 1]))
      throw Error(ErrorCode::Internal, "support not strictly ascending inside [0, n)");
    if (w.coeffs[i] == 0 || w.coeffs[i] >= code.q) throw Error(ErrorCode::Internal, "bad coefficient");
  }
  if (!satisfies_parity_checks(code, w)) throw Error(ErrorCode::RootCheckFailed, w.recipe + ": parity checks fail");
  if (!divisible_by_generator(code, w)) throw Error(ErrorCode::RootCheckFailed, w.recipe + ": not a multiple of g");
}

namespace {

// Sorts positions and carries coefficients along.
Witness make_witness(std::vector<std::pair<std::uint64_t, std::uint32_t>> terms, std::string recipe) {
  std::sort(terms.begin(), terms.end());
  Witness w;
  w.recipe = std::move(recipe);
  for (auto& [pos, c] : terms) {
    if (!w.support.empty() && w.support.back() == pos) throw Error(ErrorCode::Internal, "repeated position");
    w.support.push_back(pos);
    w.coeffs.push_back(c);
  }
  return w;
}

std::uint32_t minus_one(const BchCode& code) {
  return static_cast<std::uint32_t>(code.tower->small->neg(code.tower->small->one()).value);
}

// Pattern of coefficients on c consecutive cosets of the order-r subgroup.
Witness subgroup_pattern(const BchCode& code, std::uint64_t r, const std::vector<std::uint32_t>& pattern,
                         const std::string& recipe) {
  const std::uint64_t stride = code.n / r;
  std::vector<std::pair<std::uint64_t, std::uint32_t>> terms;
  for (std::size_t j = 0; j < pattern.size(); ++j)
    for (std::uint64_t i = 0; i < r; ++i) terms.emplace_back(j + i * stride, pattern[j]);
  return make_witness(std::move(terms), recipe);
}

}  // namespace

Witness witness_subgroup(const BchCode& code) {
  const std::uint32_t p = code.tower->p;
  struct Cand {
    std::uint64_t weight, r;
    std::vector<std::uint32_t> pattern;
  };
  std::vector<Cand> cands;
  for (std::uint64_t r = 2; r <= code.n; ++r) {
    if (code.n % r) continue;
    const std::uint64_t stride = code.n / r;
    cands.push_back({r, r, {1}});
    if (p > 2 && stride >= 2) cands.push_back({2 * r, r, {1, minus_one(code)}});
    if (stride >= p) cands.push_back({p * r, r, std::vector<std::uint32_t>(p, 1)});
  }
  std::stable_sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) { return a.weight < b.weight; });
  for (const auto& c : cands) {
    Witness w = subgroup_pattern(code, c.r, c.pattern, "subgroup_cosets");
    if (satisfies_parity_checks(code, w)) {
      verify_witness(code, w);
      return w;
    }
  }
  throw Error(ErrorCode::NotFound, "no subgroup-coset codeword");
}

Witness witness_order_divides(const BchCode& code, std::uint32_t l0) {
  const std::uint64_t q = code.q;
  if (code.tower->p != 2 || l0 == 0 || code.m % l0 != 0 || (code.m / l0) % 2 == 0 || code.b != 0 ||
      code.delta != checked_pow(q, l0) + 1)
    throw Error(ErrorCode::HypothesisNotMet, "need char 2, m = l0 (2t+1), delta = q^l0 + 1, b = 0");
  Witness w = subgroup_pattern(code, code.delta, {1, 1}, "order_divides");
  verify_witness(code, w);
  return w;
}

Witness witness_fifth_roots(const BchCode& code) {
  if (code.n % 5 != 0) throw Error(ErrorCode::HypothesisNotMet, "5 does not divide n");
  Witness w = subgroup_pattern(code, 5, {1}, "fifth_roots");
  verify_witness(code, w);
  return w;
}

Witness witness_quadrinomial(const BchCode& code) {
  if (code.q % 2 == 0) throw Error(ErrorCode::HypothesisNotMet, "needs odd q");
  const std::uint64_t h = code.n / 2;
  const std::uint32_t mo = minus_one(code);
  Witness w = make_witness({{code.n - 1, 1}, {h, mo}, {h - 1, 1}, {0, mo}}, "quadrinomial");
  verify_witness(code, w);
  return w;
}

Witness witness_binary_weight6(const BchCode& code) {
  if (code.q != 2 || code.m % 2 != 0) throw Error(ErrorCode::HypothesisNotMet, "needs q = 2 and even m");
  const Tower& t = *code.tower;
  const Field& B = *t.big;
  const std::uint64_t n = code.n, top = n - 1;
  for (std::uint64_t h = 3; h < top; ++h) {
    if (h == (top + 2) / 2) continue;
    const Elt a = B.add(B.add(B.one(), t.pow_beta(1)), t.pow_beta(h));
    const Elt c = B.add(B.add(B.one(), t.pow_beta(h - 1)), t.pow_beta(h));
    if (a == B.zero() || c == B.zero()) continue;
    auto idx = t.unit_index(B.div(a, c));
    if (!idx) continue;
    const std::uint64_t s = *idx;
    std::vector<std::uint64_t> pos{0, 1, h, s, (h - 1 + s) % n, (h + s) % n};
    std::sort(pos.begin(), pos.end());
    if (std::adjacent_find(pos.begin(), pos.end()) != pos.end()) continue;
    std::vector<std::pair<std::uint64_t, std::uint32_t>> terms;
    for (auto x : pos) terms.emplace_back(x, 1);
    Witness w = make_witness(std::move(terms), "binary_weight6");
    if (!satisfies_parity_checks(code, w)) continue;
    verify_witness(code, w);
    return w;
  }
  throw Error(ErrorCode::NotFound, "no weight-6 word from the trinomial ratio");
}

SparsePoly ternary_weight8_odd_m(std::uint64_t n) {
  if (n % 4 != 0) throw Error(ErrorCode::HypothesisNotMet, "needs 4 | n");
  // (x^(n/2) + 1)(x^(n/4) + 1)(x^(n/4 - 1) - 1)
  std::vector<std::pair<std::uint64_t, std::int64_t>> acc{{0, 1}};
  const std::vector<std::vector<std::pair<std::uint64_t, std::int64_t>>> factors{
      {{n / 2, 1}, {0, 1}}, {{n / 4, 1}, {0, 1}}, {{n / 4 - 1, 1}, {0, -1}}};
  for (const auto& f : factors) {
    std::vector<std::pair<std::uint64_t, std::int64_t>> next;
    for (auto [e1, c1] : acc)
      for (auto [e2, c2] : f) next.emplace_back((e1 + e2) % n, c1 * c2);
    std::sort(next.begin(), next.end());
    acc.clear();
    for (auto& t : next) {
      if (!acc.empty() && acc.back().first == t.first)
        acc.back().second += t.second;
      else
        acc.push_back(t);
    }
  }
  SparsePoly f{"ternary_weight8_odd_m", n, {}};
  for (auto& t : acc)
    if (t.second % 3 != 0) f.terms.push_back(t);
  return f;
}

SparsePoly ternary_weight8_length82() {
  return {"ternary_weight8_length82", 82, {{34, 1}, {33, 1}, {27, -1}, {20, -1}, {14, 1}, {7, 1}, {1, -1}, {0, -1}}};
}

SparsePoly ternary_weight6_length82() {
  return {"ternary_weight6_length82", 82, {{16, 1}, {15, -1}, {11, 1}, {5, 1}, {1, -1}, {0, 1}}};
}

Witness witness_polynomial_divisor(const BchCode& code, const SparsePoly& f) {
  const std::uint64_t N = f.period;
  if (N == 0 || code.n % N != 0) throw Error(ErrorCode::NotDivisor, "period does not divide n");
  const Field& S = *code.tower->small;
  for (auto& [e, c] : f.terms)
    if (e >= N) throw Error(ErrorCode::InvalidArgument, "exponent not below the period");
  for (std::uint64_t j = 1; j < N; ++j) {
    if (std::gcd(j, N) != 1) continue;
    const std::uint64_t step = j * (code.n / N);
    std::vector<std::pair<std::uint64_t, std::uint32_t>> terms;
    for (auto& [e, c] : f.terms) {
      const Elt v = S.from_int(c);
      if (v.value) terms.emplace_back(step * e % code.n, static_cast<std::uint32_t>(v.value));
    }
    Witness w = make_witness(std::move(terms), "polynomial_divisor:" + f.name);
    if (!satisfies_parity_checks(code, w)) continue;
    verify_witness(code, w);
    return w;
  }
  throw Error(ErrorCode::RootCheckFailed, f.name + " has no lift vanishing on the window");
}

}  // namespace antibch
