#include "antibch/bch.hpp"

#include <algorithm>
#include <set>

#include "antibch/error.hpp"

namespace antibch {

std::uint64_t reduce_mod(std::int64_t b, std::uint64_t n) {
  const std::int64_t sn = static_cast<std::int64_t>(n);
  return static_cast<std::uint64_t>((b % sn + sn) % sn);
}

std::vector<std::uint64_t> window_leaders(const CosetReport& cosets, std::uint64_t delta, std::uint64_t b) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t t = 0; t + 1 < delta; ++t) out.push_back(cosets.leaders[cosets.leader_of[(b + t) % cosets.n]]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

std::vector<std::uint64_t> window_leaders_direct(std::uint64_t q, std::uint64_t n, std::uint64_t delta,
                                                 std::uint64_t b) {
  std::set<std::uint64_t> leaders;
  std::vector<char> seen(n, 0);
  for (std::uint64_t t = 0; t + 1 < delta; ++t) {
    const std::uint64_t r = (b + t) % n;
    if (seen[r]) continue;
    auto c = coset(q, n, r);
    for (auto x : c) seen[x] = 1;
    leaders.insert(c.front());
  }
  return {leaders.begin(), leaders.end()};
}

std::vector<std::uint64_t> expand(std::uint64_t q, std::uint64_t n, const std::vector<std::uint64_t>& leaders) {
  std::vector<std::uint64_t> out;
  for (auto s : leaders) {
    auto c = coset(q, n, s);
    out.insert(out.end(), c.begin(), c.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

void check_delta(std::uint64_t delta, std::uint64_t n) {
  if (delta < 2 || delta > n)
    throw Error(ErrorCode::DeltaOutOfRange, "delta = " + std::to_string(delta) + " outside [2, " + std::to_string(n) + "]");
}

}  // namespace

std::vector<std::uint64_t> defining_set(std::uint64_t q, std::uint32_t m, std::uint64_t delta, std::int64_t b) {
  const std::uint64_t n = checked_pow(q, m) + 1;
  check_delta(delta, n);
  return expand(q, n, window_leaders_direct(q, n, delta, reduce_mod(b, n)));
}

BchCode build_code(std::uint64_t q, std::uint32_t m, std::uint64_t delta, std::int64_t b) {
  auto tower = Tower::make(q, m);
  BchCode c;
  c.q = q;
  c.m = m;
  c.n = tower->n;
  check_delta(delta, c.n);
  c.delta = delta;
  c.b = reduce_mod(b, c.n);
  c.tower = tower;
  c.window_leaders = window_leaders_direct(q, c.n, delta, c.b);
  c.defining_set = expand(q, c.n, c.window_leaders);
  Poly g = Poly::one(tower->small);
  for (auto s : c.window_leaders) g = g * minimal_polynomial(*tower->emb, tower->beta, s, c.n, q);
  c.generator = g;
  if (static_cast<std::uint64_t>(g.degree()) != c.defining_set.size())
    throw Error(ErrorCode::Internal, "generator degree differs from defining-set size");
  if (!x_pow_minus_one(tower->small, c.n).divmod(g).second.is_zero())
    throw Error(ErrorCode::Internal, "generator does not divide x^n - 1");
  c.dimension = c.n - c.defining_set.size();
  c.lcd = is_self_reciprocal(g);
  c.beta = BetaWitness{tower->p, tower->big->k(), tower->big->modulus(), tower->beta_exponent};
  return c;
}

std::uint64_t dimension_formula(std::uint64_t q, std::uint32_t m, std::uint64_t delta, std::int64_t b) {
  if (!prime_power(q)) throw Error(ErrorCode::NotPrime, "q must be a prime power");
  const std::uint64_t qm = checked_pow(q, m);
  if (b == 0) {
    if (m < 1 || delta < 3 || delta > checked_pow(q, (m - 1) / 2) + 3)
      throw Error(ErrorCode::RangeUnsupported, "need 3 <= delta <= q^floor((m-1)/2) + 3");
    // Small n can have short cosets inside the window; the count then exceeds q^m.
    const std::uint64_t removed = 2 * m * (delta - 2 - (delta - 2) / q);
    if (removed > qm) throw Error(ErrorCode::RangeUnsupported, "closed form is negative here; cosets are not all full size");
    return qm - removed;
  }
  if (b == 1) {
    if (m < 3) throw Error(ErrorCode::RangeUnsupported, "need m >= 3");
    const std::uint64_t top = checked_pow(q, (m - 1) / 2 + 1);
    if (delta < 2 || delta > top) throw Error(ErrorCode::RangeUnsupported, "need 2 <= delta <= q^(h+1)");
    if (m % 2 == 0 || delta <= top - q) return qm + 1 - 2 * m * (delta - 1 - (delta - 1) / q);
    // Past its first value the upper branch overstates the dimension by 2 when m = 3.
    if (m == 3 && delta > top - q + 1) throw Error(ErrorCode::RangeUnsupported, "upper branch does not hold for m = 3");
    return qm + 1 - 2 * m * (top - q - (delta - 1) / q);
  }
  throw Error(ErrorCode::RangeUnsupported, "closed forms cover b = 0 and b = 1 only");
}

std::uint64_t longest_cyclic_run(const std::vector<std::uint64_t>& set, std::uint64_t n) {
  if (set.size() >= n) return n;
  std::vector<char> in(n, 0);
  for (auto x : set) in[x] = 1;
  std::uint64_t start = 0;
  while (in[start]) ++start;  // a gap exists
  std::uint64_t best = 0, run = 0;
  for (std::uint64_t i = 1; i <= n; ++i) {
    if (in[(start + i) % n]) {
      best = std::max(best, ++run);
    } else {
      run = 0;
    }
  }
  return best;
}

std::uint64_t bch_bound(const BchCode& code) {
  if (code.defining_set.size() >= code.n) return code.n + 1;
  return 1 + longest_cyclic_run(code.defining_set, code.n);
}

std::vector<EqualityClaim> structural_equalities(const CosetReport& cosets, std::uint64_t delta, std::uint64_t b) {
  const std::uint64_t q = cosets.q, n = cosets.n;
  check_delta(delta, n);
  b %= n;
  std::vector<EqualityClaim> out;
  auto claim = [&](std::uint64_t d1, std::uint64_t b1, std::uint64_t d2, std::uint64_t b2) {
    EqualityClaim c{d1, b1, d2, b2, false};
    c.holds = window_leaders(cosets, d1, b1) == window_leaders(cosets, d2, b2);
    out.push_back(c);
  };
  if (b == 0 && delta % q == 1 % q && n >= 2 * delta) {
    claim(delta, 0, delta + 1, 0);
    claim(delta, 0, 2 * (delta - 1), n - (delta - 2));
    claim(delta, 0, 2 * delta, n - (delta - 1));
    return out;
  }
  if (b != 0 && (delta + b - 1) % q == 0 && delta + 1 <= n) {
    claim(delta, b, delta + 1, b);
    return out;
  }
  throw Error(ErrorCode::HypothesisNotMet, "need delta = 1 mod q with b = 0 and n >= 2 delta, or delta = 1 - b mod q");
}

std::vector<EqualityClaim> structural_equalities(std::uint64_t q, std::uint32_t m, std::uint64_t delta,
                                                 std::int64_t b) {
  auto cosets = leaders_brute_force(q, m);
  return structural_equalities(cosets, delta, reduce_mod(b, cosets.n));
}

BoundReport bound_report(const BchCode& code) {
  BoundReport r;
  r.bch_bound = bch_bound(code);
  r.best_lower = r.bch_bound;
  const std::uint64_t q = code.q, n = code.n, d = code.delta, b = code.b;
  auto add = [&](const char* rule, std::uint64_t v) {
    r.window_bounds.push_back({rule, v});
    r.best_lower = std::max(r.best_lower, v);
  };
  if (b == 0) {
    add("symmetric_window", 2 * (d - 1));
    if (d % q == 1 % q && n >= 2 * d) add("symmetric_window_delta_1_mod_q", 2 * d);
  } else if ((d + b - 1) % q == 0 && d + 1 <= n) {
    // Only where the enlarged window gives the same code.
    auto cosets = cyclotomic_partition(q, n);
    if (window_leaders(cosets, d, b) == window_leaders(cosets, d + 1, b)) add("window_extends_by_one", d + 1);
  }
  return r;
}

}  // namespace antibch
