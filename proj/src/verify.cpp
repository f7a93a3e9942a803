#include "antibch/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "antibch/error.hpp"

#ifndef ANTIBCH_GOLDEN_PATH
#define ANTIBCH_GOLDEN_PATH "data/golden_cases.json"
#endif

namespace antibch {

bool VerifyReport::ok() const {
  return std::all_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.pass; });
}

std::string default_golden_path() {
  if (const char* env = std::getenv("ANTIBCH_GOLDEN_PATH"); env && *env) return env;
  return ANTIBCH_GOLDEN_PATH;
}

namespace {

std::string join(const std::vector<std::uint64_t>& v) {
  std::string s;
  for (auto x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

CaseResult leaders_case(const Json& c) {
  CaseResult r;
  const auto q = c.at("q").get<std::uint64_t>();
  const auto m = c.at("m").get<std::uint32_t>();
  const auto want = c.at("expect").at("leaders").get<std::vector<std::uint64_t>>();
  const auto rep = leaders_brute_force(q, m);
  std::vector<std::uint64_t> closed;
  for (std::uint64_t a = 0; a < rep.n; ++a)
    if (is_leader_closed_form(q, m, a).verdict == LeaderVerdict::Leader) closed.push_back(a);
  r.pass = rep.leaders == want && closed == want;
  r.detail = "brute force {" + join(rep.leaders) + "}, closed form {" + join(closed) + "}";
  return r;
}

CaseResult code_case(const Json& c, const Budgets& budgets) {
  CaseResult r;
  const auto q = c.at("q").get<std::uint64_t>();
  const auto m = c.at("m").get<std::uint32_t>();
  const auto delta = c.at("delta").get<std::uint64_t>();
  const auto b = c.at("b").get<std::int64_t>();
  const Json& e = c.at("expect");
  Json want = e;
  if (c.contains("divergence")) {
    r.expected_divergence = true;
    for (auto it = c["divergence"].begin(); it != c["divergence"].end(); ++it) want[it.key()] = it.value();
  }
  const BchCode code = build_code(q, m, delta, b);
  CertifyOptions opt;
  opt.budgets = budgets;
  const auto cert = certify(code, opt);
  std::ostringstream os;
  os << "[" << code.n << "," << code.dimension << ",";
  if (cert.exact) os << cert.lower; else os << cert.lower << ".." << (cert.upper ? std::to_string(*cert.upper) : "?");
  os << "]";
  bool pass = true;
  if (want.contains("n")) pass &= code.n == want["n"].get<std::uint64_t>();
  if (want.contains("k")) pass &= code.dimension == want["k"].get<std::uint64_t>();
  if (want.contains("d")) pass &= cert.exact && cert.lower == want["d"].get<std::uint64_t>();
  r.pass = pass;
  r.detail = os.str();
  if (r.expected_divergence) r.detail += " (printed value differs: " + e.dump() + ")";
  return r;
}

CaseResult interval_case(const Json& c, const Budgets& budgets) {
  CaseResult r;
  const BchCode code = build_code(c.at("q").get<std::uint64_t>(), c.at("m").get<std::uint32_t>(),
                                  c.at("delta").get<std::uint64_t>(), c.at("b").get<std::int64_t>());
  CertifyOptions opt;
  opt.budgets = budgets;
  const auto cert = certify(code, opt);
  const auto floor = c.at("expect").at("lower_at_least").get<std::uint64_t>();
  r.pass = !cert.exact && cert.lower >= floor;
  r.detail = "[" + std::to_string(cert.lower) + ", " + (cert.upper ? std::to_string(*cert.upper) : "?") + "]";
  return r;
}

CaseResult blocks_case(const Json& c) {
  CaseResult r;
  const auto bs = block_set(c.at("q").get<std::uint64_t>(), c.at("k").get<std::uint64_t>(), c.at("l").get<std::uint64_t>());
  const Json& e = c.at("expect");
  const auto card = bs.blocks.size();
  r.pass = true;
  if (e.contains("cardinality")) r.pass &= card == e["cardinality"].get<std::size_t>();
  if (e.contains("min_cardinality")) r.pass &= card >= e["min_cardinality"].get<std::size_t>();
  r.detail = "cardinality " + std::to_string(card);
  return r;
}

CaseResult zetterberg_case(const Json& c) {
  CaseResult r;
  const auto w = c.at("w").get<std::uint64_t>();
  const auto z = zetterberg_low_weight(c.at("p").get<std::uint64_t>(), c.at("m").get<std::uint32_t>(), w);
  const Json& e = c.at("expect");
  const auto count = z.counts.at(w);
  r.pass = e.contains("count") ? count == e["count"].get<std::uint64_t>() : count > 0;
  r.detail = "B_" + std::to_string(w) + " = " + std::to_string(count);
  return r;
}

std::vector<CaseResult> paper_examples(const Budgets& budgets, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open golden data file " + path);
  const Json data = Json::parse(in);
  std::vector<CaseResult> out;
  for (const auto& c : data.at("cases")) {
    CaseResult r;
    const auto kind = c.at("kind").get<std::string>();
    try {
      if (kind == "leaders") r = leaders_case(c);
      else if (kind == "code") r = code_case(c, budgets);
      else if (kind == "interval") r = interval_case(c, budgets);
      else if (kind == "blocks") r = blocks_case(c);
      else if (kind == "zetterberg") r = zetterberg_case(c);
      else throw Error(ErrorCode::InvalidArgument, "unknown case kind " + kind);
    } catch (const std::exception& ex) {
      r.pass = false;
      r.detail = std::string("error: ") + ex.what();
    }
    r.id = c.at("id").get<std::string>();
    r.kind = kind;
    out.push_back(std::move(r));
  }
  return out;
}

// Seeded property checks; each returns a count of mismatches.

std::uint64_t field_properties(std::mt19937_64& rng) {
  std::uint64_t bad = 0;
  for (auto [p, k] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{{2, 8}, {3, 4}, {5, 2}, {7, 3}, {2, 22}}) {
    const auto F = Field::make(p, k);
    std::uniform_int_distribution<std::uint64_t> pick(0, F->order() - 1);
    for (int t = 0; t < 200; ++t) {
      const Elt a{pick(rng)}, b{pick(rng)}, c{pick(rng)};
      bad += F->mul(a, F->add(b, c)) != F->add(F->mul(a, b), F->mul(a, c));
      bad += F->mul(a, b) != F->mul_poly(a, b);
      if (a.value) bad += F->mul(a, F->inv(a)) != F->one();
    }
  }
  const auto src = Field::make(3, 2), dst = Field::make(3, 8);
  const Embedding emb(src, dst);
  for (std::uint64_t a = 0; a < 9; ++a)
    for (std::uint64_t b = 0; b < 9; ++b) {
      bad += emb.map(src->mul(Elt{a}, Elt{b})) != dst->mul(emb.map(Elt{a}), emb.map(Elt{b}));
      bad += emb.map(src->add(Elt{a}, Elt{b})) != dst->add(emb.map(Elt{a}), emb.map(Elt{b}));
    }
  return bad;
}

std::uint64_t leader_properties(std::mt19937_64& rng) {
  std::uint64_t bad = 0;
  const std::vector<std::pair<std::uint64_t, std::uint32_t>> pool{{2, 5}, {3, 4}, {4, 3}, {5, 3}, {7, 2}, {8, 3}, {9, 2}};
  for (int t = 0; t < 3; ++t) {
    auto [q, m] = pool[rng() % pool.size()];
    const auto rep = leaders_brute_force(q, m);
    std::set<std::uint64_t> leaders(rep.leaders.begin(), rep.leaders.end());
    for (std::uint64_t a = 0; a < rep.n; ++a) {
      const auto v = is_leader_closed_form(q, m, a).verdict;
      if (v == LeaderVerdict::RangeExceeded) bad += leaders.count(a);
      else bad += (v == LeaderVerdict::Leader) != (leaders.count(a) == 1);
    }
  }
  return bad;
}

std::uint64_t esp_properties(std::mt19937_64& rng) {
  std::uint64_t bad = 0;
  for (std::uint64_t q : {4, 8, 9}) {
    const auto U = UnitCircle::make(q);
    const Field& F = *U->big;
    std::uniform_int_distribution<std::uint64_t> pick(1, F.order() - 1);
    for (int t = 0; t < 100; ++t) {
      const std::uint64_t eta = 1 + rng() % 3;
      const std::uint64_t l = 1 + rng() % eta;
      std::set<std::uint64_t> seen;
      std::vector<Elt> x;
      while (x.size() < eta + l) {
        const Elt v{pick(rng)};
        if (seen.insert(v.value).second) x.push_back(v);
      }
      const Elt lhs = F.mul(m_matrix_det(F, eta, l, x), F.pow(esp(F, x, static_cast<std::int64_t>(eta + l)), l));
      const Elt rhs = F.mul(esp(F, x, static_cast<std::int64_t>(eta)), vandermonde_det(F, x));
      bad += lhs != rhs;
    }
    // Product form against the subset sum on random subsets of the unit circle.
    for (int t = 0; t < 50; ++t) {
      std::vector<Elt> x;
      for (const Elt& u : U->points)
        if (rng() & 1) x.push_back(u);
      const auto all = esp_all(F, x);
      for (std::size_t r = 0; r <= x.size(); ++r) {
        Elt sum = F.zero();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << x.size()); ++mask) {
          if (static_cast<std::size_t>(__builtin_popcountll(mask)) != r) continue;
          Elt prod = F.one();
          for (std::size_t i = 0; i < x.size(); ++i)
            if (mask >> i & 1) prod = F.mul(prod, x[i]);
          sum = F.add(sum, prod);
        }
        bad += all[r] != sum;
      }
    }
  }
  return bad;
}

std::uint64_t certify_properties(std::mt19937_64& rng, const Budgets& budgets) {
  std::uint64_t bad = 0;
  const std::vector<std::pair<std::uint64_t, std::uint32_t>> pool{{2, 3}, {2, 4}, {3, 2}, {4, 2}, {5, 2}, {3, 3}, {2, 5}};
  for (int t = 0; t < 12; ++t) {
    auto [q, m] = pool[rng() % pool.size()];
    const std::uint64_t n = checked_pow(q, m) + 1;
    const std::uint64_t delta = 2 + rng() % (n - 2);
    const std::int64_t b = static_cast<std::int64_t>(rng() % n);
    const BchCode code = build_code(q, m, delta, b);
    bad += !code.lcd;
    if (code.dimension == 0 || projective_count(q, code.dimension) > (std::uint64_t{1} << 20)) continue;
    const auto truth = exhaustive_distance(code);
    CertifyOptions opt;
    opt.budgets = budgets;
    opt.use_exhaustive = false;
    const auto cert = certify(code, opt);
    bad += cert.lower > truth.distance;
    if (cert.upper) bad += *cert.upper < truth.distance;
    if (cert.exact) bad += cert.lower != truth.distance;
    const auto ss = support_search(code, std::min<std::uint64_t>(truth.distance, 5));
    if (truth.distance <= 5) bad += !ss.witness || ss.witness->weight() != truth.distance;
    else bad += ss.witness.has_value();
  }
  return bad;
}

std::vector<CaseResult> properties(std::uint64_t seed, const Budgets& budgets) {
  std::vector<CaseResult> out;
  std::mt19937_64 rng(seed);
  auto run = [&](const std::string& id, auto&& check) {
    CaseResult r;
    r.id = id;
    r.kind = "property";
    try {
      const std::uint64_t bad = check();
      r.pass = bad == 0;
      r.detail = std::to_string(bad) + " mismatches";
    } catch (const std::exception& ex) {
      r.detail = std::string("error: ") + ex.what();
    }
    out.push_back(std::move(r));
  };
  run("field_axioms_and_embedding", [&] { return field_properties(rng); });
  run("closed_form_leaders", [&] { return leader_properties(rng); });
  run("esp_identities", [&] { return esp_properties(rng); });
  run("certify_against_exhaustive", [&] { return certify_properties(rng, budgets); });
  return out;
}

}  // namespace

VerifyReport run_verify(const std::string& suite, std::uint64_t seed, const Budgets& budgets,
                        const std::string& golden_path) {
  if (suite != "paper-examples" && suite != "properties" && suite != "all")
    throw Error(ErrorCode::InvalidArgument, "unknown suite " + suite);
  VerifyReport rep;
  rep.suite = suite;
  if (suite != "properties") rep.cases = paper_examples(budgets, golden_path);
  if (suite != "paper-examples") {
    auto p = properties(seed, budgets);
    rep.cases.insert(rep.cases.end(), p.begin(), p.end());
  }
  return rep;
}

Json to_json(const VerifyReport& r) {
  Json cases = Json::array();
  for (const auto& c : r.cases)
    cases.push_back({{"id", c.id}, {"kind", c.kind}, {"pass", c.pass}, {"expected_divergence", c.expected_divergence},
                     {"detail", c.detail}});
  return {{"suite", r.suite}, {"ok", r.ok()}, {"cases", cases}};
}

}  // namespace antibch
