#include "antibch/tower.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "antibch/cosets.hpp"
#include "antibch/error.hpp"

namespace antibch {

std::shared_ptr<const Tower> Tower::make(std::uint64_t q, std::uint32_t m) {
  static std::mutex mu;
  static std::map<std::pair<std::uint64_t, std::uint32_t>, std::shared_ptr<const Tower>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({q, m});
    if (it != cache.end()) return it->second;
  }
  auto pp = prime_power(q);
  if (!pp) throw Error(ErrorCode::NotPrime, "q = " + std::to_string(q) + " is not a prime power");
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "m must be at least 1");
  auto t = std::make_shared<Tower>();
  t->q = q;
  t->m = m;
  t->p = static_cast<std::uint32_t>(pp->first);
  t->e = pp->second;
  t->n = checked_pow(q, m) + 1;
  if (t->n > (std::uint64_t{1} << 22)) throw Error(ErrorCode::BudgetExceeded, "code length above 2^22");
  t->small = Field::make(t->p, t->e);
  t->big = Field::make(t->p, 2 * m * t->e);
  t->emb = std::make_shared<Embedding>(t->small, t->big);
  if (q <= 256) t->gf = std::make_shared<SmallField>(*t->small);
  t->beta_exponent = (t->big->order() - 1) / t->n;
  t->beta = nth_root_of_unity(*t->big, t->n);
  t->beta_pow.resize(t->n);
  Elt x = t->big->one();
  for (std::uint64_t i = 0; i < t->n; ++i) {
    t->beta_pow[i] = x;
    t->index_.emplace_back(x.value, static_cast<std::uint32_t>(i));
    x = t->big->mul(x, t->beta);
  }
  std::sort(t->index_.begin(), t->index_.end());
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(std::make_pair(q, m), t);
  return it->second;
}

std::optional<std::uint64_t> Tower::unit_index(Elt x) const {
  auto it = std::lower_bound(index_.begin(), index_.end(), std::make_pair(x.value, std::uint32_t{0}));
  if (it == index_.end() || it->first != x.value) return std::nullopt;
  return it->second;
}

const SmallField& Tower::small_tables() const {
  if (!gf) throw Error(ErrorCode::Unsupported, "coefficient field above GF(256)");
  return *gf;
}

Poly minimal_polynomial(const Embedding& emb, Elt beta, std::uint64_t s, std::uint64_t n, std::uint64_t q) {
  const Field& B = *emb.target();
  std::vector<Elt> acc{B.one()};
  for (std::uint64_t j : coset(q, n, s)) {
    const Elt root = B.pow(beta, j);
    std::vector<Elt> next(acc.size() + 1);
    for (std::size_t i = 0; i < acc.size(); ++i) {
      next[i + 1] = B.add(next[i + 1], acc[i]);
      next[i] = B.sub(next[i], B.mul(acc[i], root));
    }
    acc = std::move(next);
  }
  std::vector<Elt> small(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) {
    auto v = emb.pull_back(acc[i]);
    if (!v) throw Error(ErrorCode::CoefficientNotInSubfield, "minimal polynomial coefficient outside GF(q)");
    small[i] = *v;
  }
  return Poly(emb.source(), std::move(small));
}

Poly lcm_minimal_polynomials(std::uint64_t q, std::uint32_t m, std::uint64_t n, std::int64_t b, std::uint64_t delta) {
  auto t = Tower::make(q, m);
  if (n != t->n) throw Error(ErrorCode::InvalidArgument, "n must equal q^m + 1");
  if (delta < 2 || delta > n) throw Error(ErrorCode::DeltaOutOfRange, "delta must lie in [2, n]");
  const std::int64_t sn = static_cast<std::int64_t>(n);
  std::set<std::uint64_t> leaders;
  for (std::uint64_t t0 = 0; t0 + 1 < delta; ++t0) {
    const std::uint64_t r = static_cast<std::uint64_t>(((b + static_cast<std::int64_t>(t0)) % sn + sn) % sn);
    leaders.insert(coset(q, n, r).front());
  }
  Poly g = Poly::one(t->small);
  for (auto s : leaders) g = g * minimal_polynomial(*t->emb, t->beta, s, n, q);
  return g;
}

}  // namespace antibch
