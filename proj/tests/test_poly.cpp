#include <doctest.h>

#include <set>

#include "antibch/cosets.hpp"
#include "antibch/error.hpp"
#include "antibch/tower.hpp"

using namespace antibch;

TEST_CASE("arithmetic and division") {
  const auto F = Field::make(3, 1);
  const Poly a(F, {Elt{1}, Elt{2}, Elt{0}, Elt{1}});  // 1 + 2x + x^3
  const Poly b(F, {Elt{2}, Elt{1}});                  // 2 + x
  auto [q, r] = a.divmod(b);
  CHECK(q * b + r == a);
  CHECK(r.degree() < b.degree());
  CHECK(a.eval(Elt{1}) == Elt{1});  // 1 + 2 + 1 = 4 = 1
  CHECK(Poly(F, {Elt{0}, Elt{0}}).is_zero());
}

TEST_CASE("reciprocal") {
  const auto F = Field::make(5, 1);
  const Poly f(F, {Elt{2}, Elt{3}, Elt{1}});
  const Poly r = reciprocal(f);
  CHECK(r.coeffs() == std::vector<Elt>{Elt{1}, Elt{3}, Elt{2}});
  CHECK(reciprocal(r) == f);
  CHECK_THROWS_AS(reciprocal(Poly(F, {Elt{0}, Elt{1}})), Error);
  // 1 + x + x^2 is self-reciprocal; 2 + 2x is a scalar multiple of its reciprocal.
  CHECK(is_self_reciprocal(Poly(F, {Elt{1}, Elt{1}, Elt{1}})));
  CHECK(is_self_reciprocal(Poly(F, {Elt{2}, Elt{2}})));
  CHECK_FALSE(is_self_reciprocal(f));
}

TEST_CASE("minimal polynomials over the small field") {
  for (auto [q, m] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{{2, 3}, {2, 4}, {3, 2}, {4, 2}, {3, 3}, {9, 2}}) {
    const auto T = Tower::make(q, m);
    const std::uint64_t n = T->n;
    const auto rep = cyclotomic_partition(q, n);
    Poly prod = Poly::one(T->small);
    for (auto s : rep.leaders) {
      const Poly mp = minimal_polynomial(*T->emb, T->beta, s, n, q);
      CHECK(mp.is_monic());
      CHECK(static_cast<std::uint64_t>(mp.degree()) == rep.sizes.at(s));
      // Vanishes on its coset and nowhere else among the n-th roots.
      const auto members = coset(q, n, s);
      const std::set<std::uint64_t> mem(members.begin(), members.end());
      for (std::uint64_t j = 0; j < n; ++j)
        CHECK((mp.eval_in(*T->emb, T->pow_beta(j)) == T->big->zero()) == (mem.count(j) == 1));
      prod = prod * mp;
    }
    CHECK(prod == x_pow_minus_one(T->small, n));
  }
}

TEST_CASE("lcm of minimal polynomials divides x^n - 1") {
  const auto T = Tower::make(4, 2);
  for (std::uint64_t delta = 2; delta <= 10; ++delta) {
    const Poly g = lcm_minimal_polynomials(4, 2, 17, 0, delta);
    CHECK(x_pow_minus_one(T->small, 17).divmod(g).second.is_zero());
    CHECK(is_self_reciprocal(g));
  }
}
