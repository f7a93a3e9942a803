// Acceptance run: one PASS/FAIL line per criterion.
// Usage: acceptance [criterion...]   (default: all)

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "antibch/json_io.hpp"
#include "antibch/parallel.hpp"

using namespace antibch;

namespace {

// Wall-clock limits per criterion, seconds.
constexpr double kLimit1 = 1.0;
constexpr double kLimit2 = 120.0;
constexpr double kLimit3 = 600.0;
constexpr double kLimit4 = 600.0;
constexpr double kLimit5 = 60.0;
constexpr double kLimit7 = 300.0;
// Larger subset spaces are checked on the subgroup block alone.
constexpr std::uint64_t kEnumerateBlocks = std::uint64_t{1} << 22;

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    pass = false;
    if (detail.size() < 2000) detail += (detail.empty() ? "" : "; ") + why;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<std::uint64_t> range(std::uint64_t a, std::uint64_t b) {
  std::vector<std::uint64_t> v;
  for (auto x = a; x <= b; ++x) v.push_back(x);
  return v;
}

Outcome criterion1() {
  Outcome o;
  auto want8 = range(0, 7);
  for (auto x : {10, 11, 12, 13, 14, 19, 20, 21, 28}) want8.push_back(x);
  auto want7 = range(0, 6);
  for (auto x : {9, 10, 11, 12, 17, 18, 25}) want7.push_back(x);
  for (auto& [q, want] : std::vector<std::pair<std::uint64_t, std::vector<std::uint64_t>>>{{8, want8}, {7, want7}}) {
    const auto rep = leaders_brute_force(q, 2);
    if (rep.leaders != want) o.fail("brute-force leaders differ for q=" + std::to_string(q));
    std::vector<std::uint64_t> closed;
    for (std::uint64_t a = 0; a < rep.n; ++a)
      if (is_leader_closed_form(q, 2, a).verdict == LeaderVerdict::Leader) closed.push_back(a);
    if (closed != want) o.fail("closed-form leaders differ for q=" + std::to_string(q));
  }
  return o;
}

Outcome criterion2() {
  Outcome o;
  std::uint64_t checked = 0;
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
    for (std::uint32_t m = 1;; ++m) {
      const std::uint64_t n = checked_pow(q, m) + 1;
      if (n > (std::uint64_t{1} << 18)) break;
      const auto rep = leaders_brute_force(q, m);
      std::vector<char> is_leader(n, 0);
      for (auto l : rep.leaders) is_leader[l] = 1;
      std::uint64_t bad = 0;
      for (std::uint64_t a = 0; a < n; ++a) {
        const auto v = is_leader_closed_form(q, m, a).verdict;
        const bool closed = v == LeaderVerdict::Leader;
        if (closed != static_cast<bool>(is_leader[a])) ++bad;
      }
      checked += n;
      if (bad) o.fail("q=" + std::to_string(q) + " m=" + std::to_string(m) + ": " + std::to_string(bad) + " mismatches");
    }
  }
  o.detail = (o.detail.empty() ? "" : o.detail + "; ") + std::to_string(checked) + " residues compared";
  return o;
}

struct Triple {
  std::uint64_t q;
  std::uint32_t m;
  std::uint64_t delta;
  std::int64_t b;
  std::uint64_t n, k, d;
};

std::vector<Triple> criterion3_cases() {
  std::vector<Triple> v;
  for (std::uint64_t d : {5, 6, 7}) v.push_back({4, 2, d, 0, 17, 4, 12});
  v.push_back({4, 2, 4, 0, 17, 8, 6});
  for (std::uint64_t d = 23; d <= 29; ++d) v.push_back({8, 2, d, 0, 65, 4, 56});
  v.push_back({8, 2, 20, 0, 65, 16, 38});
  v.push_back({9, 2, 32, 0, 82, 9, 62});
  v.push_back({5, 2, 8, 0, 26, 9, 14});
  v.push_back({7, 2, 19, 0, 50, 5, 38});
  v.push_back({7, 2, 18, 0, 50, 9, 34});
  v.push_back({3, 3, 3, 0, 28, 21, 4});
  v.push_back({5, 3, 3, 0, 126, 119, 4});
  v.push_back({2, 4, 2, 1, 17, 9, 5});
  v.push_back({2, 6, 2, 1, 65, 53, 5});
  v.push_back({4, 2, 2, 1, 17, 13, 4});
  v.push_back({3, 2, 3, 1, 10, 2, 5});
  v.push_back({3, 3, 3, 1, 28, 16, 4});
  v.push_back({3, 4, 3, 1, 82, 66, 6});
  v.push_back({3, 6, 3, 1, 730, 706, 5});
  return v;
}

std::string criterion3_json() {
  Json all = Json::array();
  for (const auto& t : criterion3_cases()) all.push_back(to_json(certify(build_code(t.q, t.m, t.delta, t.b))));
  return all.dump();
}

Outcome criterion3() {
  Outcome o;
  for (const auto& t : criterion3_cases()) {
    const auto code = build_code(t.q, t.m, t.delta, t.b);
    const auto cert = certify(code);
    std::ostringstream got;
    got << "C(" << t.q << "," << code.n << "," << t.delta << "," << t.b << ")=[" << code.n << "," << code.dimension << ","
        << cert.lower << (cert.exact ? "" : "..") << "]";
    if (code.n != t.n || code.dimension != t.k || !cert.exact || cert.lower != t.d) o.fail(got.str());
  }
  return o;
}

Outcome criterion4() {
  Outcome o;
  auto expect = [&](std::uint64_t q, std::uint32_t m, std::uint64_t delta, std::int64_t b, std::uint64_t d) {
    const auto cert = certify(build_code(q, m, delta, b));
    if (!cert.exact || cert.lower != d)
      o.fail("C(" + std::to_string(q) + "," + std::to_string(cert.n) + "," + std::to_string(delta) + "," + std::to_string(b) +
             "): lower " + std::to_string(cert.lower) + ", upper " + (cert.upper ? std::to_string(*cert.upper) : "?"));
  };
  for (std::uint32_t m = 3; m <= 12; ++m) expect(2, m, 3, 0, 6);
  expect(2, 6, 5, 0, 10);
  expect(2, 9, 9, 0, 18);
  for (std::uint32_t m = 2; m <= 7; ++m) expect(3, m, 3, 0, 4);
  expect(3, 3, 4, 0, 8);
  expect(3, 4, 4, 0, 8);
  // Narrow-sense designed distance 2.
  for (auto [q, m] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{{3, 3}, {5, 2}, {2, 5}, {2, 6}, {4, 2}, {4, 3}, {8, 2}}) {
    std::uint64_t d;
    if (q % 2 == 1) d = 2;
    else if (m % 2 == 1) d = 3;
    else if (q > 2) d = 4;
    else d = 5;  // q = 2, m = 2 mod 4 in this table
    expect(q, m, 2, 1, d);
  }
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::uint64_t symmetric = 0, shifted = 0, shifted_failed = 0, named = 0;
  std::string first_counterexample;
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
    for (std::uint32_t m = 1; m <= 5; ++m) {
      const auto cos = leaders_brute_force(q, m);
      const std::uint64_t n = cos.n;
      for (std::uint64_t delta = 2; delta <= 30 && delta <= n; ++delta) {
        if (delta % q == 1 % q && n >= 2 * delta) {
          for (const auto& c : structural_equalities(cos, delta, 0)) {
            ++symmetric;
            if (!c.holds)
              o.fail("b=0 equality C(" + std::to_string(q) + "," + std::to_string(n) + "," + std::to_string(c.delta_lhs) +
                     ",0) vs delta " + std::to_string(c.delta_rhs) + ", b " + std::to_string(c.b_rhs));
          }
          const bool binary_family = q == 2 && ((delta == 3 && m >= 3) || (delta == 5 && m >= 4) || (delta == 9 && m >= 5));
          const bool ternary_family = q == 3 && delta == 4;
          if (binary_family || ternary_family) ++named;
        }
        for (std::uint64_t b = 1; b < n; ++b) {
          if ((delta + b - 1) % q != 0 || delta + 1 > n) continue;
          for (const auto& c : structural_equalities(cos, delta, b)) {
            ++shifted;
            if (!c.holds) {
              ++shifted_failed;
              if (first_counterexample.empty())
                first_counterexample = "C(" + std::to_string(q) + "," + std::to_string(n) + "," + std::to_string(delta) + "," +
                                       std::to_string(b) + ")";
            }
          }
        }
      }
    }
  }
  if (shifted_failed)
    o.fail("window extension with b != 0 fails in " + std::to_string(shifted_failed) + " of " + std::to_string(shifted) +
           " instances, first " + first_counterexample);
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(symmetric) + " b=0 equalities (" + std::to_string(named) +
              " in the named q=2/q=3 families) all hold";
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::mt19937_64 rng(20240611);
  std::uint64_t identity_checks = 0;
  for (std::uint64_t q : {4, 8, 9}) {
    const auto U = UnitCircle::make(q);
    const Field& F = *U->big;
    std::uint64_t bad = 0;
    for (int t = 0; t < 150; ++t) {
      const std::uint64_t eta = 1 + rng() % 4;
      const std::uint64_t l = 1 + rng() % eta;
      std::set<std::uint64_t> seen;
      std::vector<Elt> x;
      while (x.size() < eta + l) {
        const Elt v{1 + rng() % (F.order() - 1)};
        if (seen.insert(v.value).second) x.push_back(v);
      }
      const Elt lhs = F.mul(m_matrix_det(F, eta, l, x), F.pow(esp(F, x, static_cast<std::int64_t>(eta + l)), l));
      const Elt rhs = F.mul(esp(F, x, static_cast<std::int64_t>(eta)), vandermonde_det(F, x));
      bad += lhs != rhs;
      ++identity_checks;
    }
    if (bad) o.fail(std::to_string(bad) + " determinant identity mismatches over GF(" + std::to_string(q * q) + ")");
  }
  // Product form against the subset sum, every subset of U_9 and U_17.
  std::uint64_t subsets = 0;
  for (std::uint64_t q : {8, 16}) {
    const auto U = UnitCircle::make(q);
    const Field& F = *U->big;
    const auto& pts = U->points;
    const std::size_t N = pts.size();
    // prod[s] = product of the points in s, built from s minus its lowest bit.
    std::vector<Elt> prod(std::size_t{1} << N);
    prod[0] = F.one();
    for (std::uint64_t s = 1; s < prod.size(); ++s) prod[s] = F.mul(prod[s & (s - 1)], pts[__builtin_ctzll(s)]);
    std::uint64_t bad = 0;
    for (std::uint64_t mask = 0; mask < prod.size(); ++mask) {
      std::vector<Elt> x;
      for (std::size_t i = 0; i < N; ++i)
        if (mask >> i & 1) x.push_back(pts[i]);
      const auto sig = esp_all(F, x);
      std::vector<Elt> sums(x.size() + 1, F.zero());
      for (std::uint64_t sub = mask;; sub = (sub - 1) & mask) {
        auto& s = sums[__builtin_popcountll(sub)];
        s = F.add(s, prod[sub]);
        if (sub == 0) break;
      }
      bad += sig != sums;
      ++subsets;
    }
    if (bad) o.fail(std::to_string(bad) + " sigma mismatches on U_" + std::to_string(q + 1));
  }
  // Blocks from subgroups of U_{q+1}.
  std::uint64_t thif = 0;
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32}) {
    const auto U = UnitCircle::make(q);
    for (std::uint64_t eta = 1; eta + 1 < q + 1; ++eta) {
      if ((q + 1) % (eta + 1) != 0) continue;
      // theta = gamma^((q+1)/(eta+1)); block {1, theta, ..., theta^eta} as exponents of gamma.
      std::vector<std::uint32_t> want;
      for (std::uint64_t i = 0; i <= eta; ++i) want.push_back(static_cast<std::uint32_t>(i * (q + 1) / (eta + 1)));
      const std::uint64_t k = eta + 1;
      if (binomial_saturating(q + 1, k) > kEnumerateBlocks) {
        // Too many subsets to enumerate; check sigma on the block itself.
        std::vector<Elt> x;
        for (auto e : want) x.push_back(U->points[e]);
        if (esp(*U->big, x, static_cast<std::int64_t>(eta)) != U->big->zero())
          o.fail("subgroup block not a zero, q=" + std::to_string(q) + " eta=" + std::to_string(eta));
        ++thif;
        continue;
      }
      const auto bs = block_set(q, k, 1);
      if (std::find(bs.blocks.begin(), bs.blocks.end(), want) == bs.blocks.end())
        o.fail("subgroup block missing, q=" + std::to_string(q) + " eta=" + std::to_string(eta));
      ++thif;
    }
  }
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(identity_checks) + " determinant checks, " +
              std::to_string(subsets) + " subsets, " + std::to_string(thif) + " subgroup blocks";
  return o;
}

Outcome criterion7() {
  Outcome o;
  auto count = [](std::uint64_t p, std::uint32_t m, std::uint64_t w) { return zetterberg_low_weight(p, m, w).counts.at(w); };
  std::ostringstream d;
  for (std::uint32_t m : {3, 4, 5, 6}) {
    const auto c = count(2, m, 4);
    d << "B4(2," << m << ")=" << c << " ";
    if (c != 0) o.fail("B4 nonzero for p=2 m=" + std::to_string(m));
  }
  for (std::uint32_t m : {4, 6}) {
    const auto c = count(2, m, 3);
    d << "B3(2," << m << ")=" << c << " ";
    if (c != 0) o.fail("B3 nonzero for p=2 m=" + std::to_string(m));
  }
  {
    const auto c = count(3, 3, 3);
    d << "B3(3,3)=" << c << " ";
    if (c != 0) o.fail("B3 nonzero for p=3 m=3");
  }
  for (std::uint32_t m : {3, 5}) {
    const auto c = count(2, m, 3);
    d << "B3(2," << m << ")=" << c << " ";
    if (c == 0) o.fail("B3 zero for p=2 m=" + std::to_string(m));
  }
  o.detail += (o.detail.empty() ? "" : "; ") + d.str();
  return o;
}

Outcome criterion8() {
  Outcome o;
  struct Open {
    std::uint64_t q;
    std::uint32_t m;
    std::uint64_t delta;
    std::int64_t b;
    std::uint64_t known_lower;
  };
  std::ostringstream d;
  for (const auto& c : std::vector<Open>{{3, 8, 4, 0, 8}, {3, 8, 3, 1, 6}, {2, 8, 5, 0, 10}, {2, 7, 5, 0, 10}, {2, 8, 9, 0, 18}}) {
    const auto cert = certify(build_code(c.q, c.m, c.delta, c.b));
    d << "C(" << c.q << "," << cert.n << "," << c.delta << "," << c.b << ") in [" << cert.lower << ","
      << (cert.upper ? std::to_string(*cert.upper) : "?") << "] ";
    if (cert.exact) o.fail("unexpectedly exact: C(" + std::to_string(c.q) + "," + std::to_string(cert.n) + ")");
    if (cert.lower < c.known_lower) o.fail("lower bound below the proven value");
  }
  o.detail += (o.detail.empty() ? "" : "; ") + d.str();
  return o;
}

Outcome criterion9() {
  Outcome o;
  set_thread_count(1);
  const std::string one = criterion3_json();
  set_thread_count(8);
  const std::string eight = criterion3_json();
  set_thread_count(1);
  if (one != eight) o.fail("JSON differs between 1 and 8 threads");
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(one.size()) + " bytes compared";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
    double limit;  // seconds; 0 = none
  };
  const std::vector<Criterion> all{
      {1, "coset-leader golden sets", criterion1, kLimit1},
      {2, "closed-form vs brute-force leaders", criterion2, kLimit2},
      {3, "parameter goldens", criterion3, kLimit3},
      {4, "exact-distance families", criterion4, kLimit4},
      {5, "structural equalities", criterion5, kLimit5},
      {6, "ESP identities", criterion6, 0},
      {7, "Zetterberg counts", criterion7, kLimit7},
      {8, "open cases stay intervals", criterion8, 0},
      {9, "thread-count determinism", criterion9, 0},
  };
  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.insert(std::stoi(argv[i]));
  bool ok = true;
  for (const auto& c : all) {
    if (!wanted.empty() && !wanted.count(c.id)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    const double secs = seconds_since(t0);
    if (c.limit > 0 && secs > c.limit) out.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit) + " s");
    ok &= out.pass;
    std::printf("criterion %d %s: %s (%.2f s) %s\n", c.id, c.name, out.pass ? "PASS" : "FAIL", secs, out.detail.c_str());
    std::fflush(stdout);
  }
  return ok ? 0 : 1;
}
