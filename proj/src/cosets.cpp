#include "antibch/cosets.hpp"

#include <algorithm>
#include <numeric>

#include "antibch/error.hpp"
#include "antibch/field.hpp"

namespace antibch {

namespace {
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
}

std::uint64_t antiprimitive_length(std::uint64_t q, std::uint32_t m) {
  if (q < 2) throw Error(ErrorCode::InvalidArgument, "q must be at least 2");
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "m must be at least 1");
  return checked_pow(q, m) + 1;
}
}  // namespace

std::vector<std::uint64_t> coset(std::uint64_t q, std::uint64_t n, std::uint64_t s) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "modulus must be positive");
  std::vector<std::uint64_t> out;
  s %= n;
  std::uint64_t x = s;
  do {
    out.push_back(x);
    x = mulmod(x, q, n);
  } while (x != s);
  std::sort(out.begin(), out.end());
  return out;
}

CosetReport cyclotomic_partition(std::uint64_t q, std::uint64_t n, std::uint64_t budget) {
  if (n > budget) throw Error(ErrorCode::BudgetExceeded, "n = " + std::to_string(n) + " exceeds coset budget");
  if (std::gcd(q, n) != 1) throw Error(ErrorCode::InvalidArgument, "q and n must be coprime");
  CosetReport r;
  r.q = q;
  r.n = n;
  constexpr std::uint32_t kUnset = 0xffffffffu;
  r.leader_of.assign(n, kUnset);
  for (std::uint64_t s = 0; s < n; ++s) {
    if (r.leader_of[s] != kUnset) continue;
    const auto idx = static_cast<std::uint32_t>(r.leaders.size());
    r.leaders.push_back(s);
    std::uint64_t x = s, size = 0;
    do {
      r.leader_of[x] = idx;
      ++size;
      x = mulmod(x, q, n);
    } while (x != s);
    r.sizes[s] = size;
  }
  return r;
}

CosetReport leaders_brute_force(std::uint64_t q, std::uint32_t m, std::uint64_t budget) {
  const std::uint64_t n = antiprimitive_length(q, m);
  CosetReport r = cyclotomic_partition(q, n, budget);
  r.m = m;
  return r;
}

std::uint64_t closed_form_range(std::uint64_t q, std::uint32_t m) {
  const std::uint64_t n = antiprimitive_length(q, m);
  if (q % 2 == 0) {
    const unsigned __int128 num = static_cast<unsigned __int128>(n - 1) * q + q;
    return static_cast<std::uint64_t>(num / (2 * (q + 1)));
  }
  return n / 2;
}

LeaderClassification is_leader_closed_form(std::uint64_t q, std::uint32_t m, std::uint64_t a) {
  const std::uint64_t n = antiprimitive_length(q, m);
  LeaderClassification out;
  if (a >= n) throw Error(ErrorCode::OutOfRange, "a must lie in [0, n)");
  if (a > closed_form_range(q, m)) {
    out.verdict = LeaderVerdict::RangeExceeded;
    return out;
  }
  const bool even = q % 2 == 0;
  using I = __int128;
  for (std::uint32_t i = 1; i < m; ++i) {
    const std::uint64_t qi = checked_pow(q, i);
    const std::uint64_t r = checked_pow(q, m - i);
    const std::uint64_t lmax = even ? (qi - 1) * q / (2 * (q + 1)) : (qi - 1) / 2;
    const std::uint64_t fl = a / r;
    for (std::uint64_t l : {fl, fl + 1}) {
      if (l < 1 || l > lmax) continue;
      const I h = static_cast<I>(a) - static_cast<I>(l) * r;
      // -l(r-1)/(qi+1) < h < l(r+1)/(qi-1)
      if (h * static_cast<I>(qi + 1) > -static_cast<I>(l) * static_cast<I>(r - 1) &&
          h * static_cast<I>(qi - 1) < static_cast<I>(l) * static_cast<I>(r + 1)) {
        out.verdict = LeaderVerdict::ExcludedForm;
        out.i = i;
        out.l = l;
        out.h = static_cast<std::int64_t>(h);
        return out;
      }
      if (fl * r == a) break;
    }
  }
  return out;
}

std::vector<std::uint64_t> largest_leaders_m2(std::uint64_t q) {
  if (!prime_power(q)) throw Error(ErrorCode::InvalidArgument, "q must be a prime power");
  if (q == 2) throw Error(ErrorCode::Unsupported, "closed form needs q > 2");
  if (q % 2 == 0) {
    std::vector<std::uint64_t> out{(q * q - q) / 2};
    for (std::uint64_t i = 2; i <= 4; ++i) {
      const std::int64_t v = (static_cast<std::int64_t>(q * q) - 3 * static_cast<std::int64_t>(q) + 6 -
                              2 * static_cast<std::int64_t>(i)) / 2;
      if (v < 0) throw Error(ErrorCode::Unsupported, "fewer than four leaders");
      out.push_back(static_cast<std::uint64_t>(v));
    }
    return out;
  }
  return {(q * q + 1) / 2, (q - 1) * (q - 1) / 2, (q * q - 2 * q - 1) / 2, (q - 3) * (q - 1) / 2};
}

std::uint64_t gcd_special(std::uint64_t a, std::uint64_t u, std::uint64_t v) {
  if (a < 2 || u < 1 || v < 1) throw Error(ErrorCode::InvalidArgument, "need a >= 2, u >= 1, v >= 1");
  const int vu = __builtin_ctzll(u), vv = __builtin_ctzll(v);
  if (vv > vu) return checked_pow(a, std::gcd(u, v)) + 1;
  return a % 2 == 0 ? 1 : 2;
}

std::string leader_verdict_name(LeaderVerdict v) {
  switch (v) {
    case LeaderVerdict::Leader: return "Leader";
    case LeaderVerdict::ExcludedForm: return "ExcludedForm";
    case LeaderVerdict::RangeExceeded: return "RangeExceeded";
  }
  return "?";
}

}  // namespace antibch
