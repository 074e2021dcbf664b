#include <algorithm>
#include <set>

#include <doctest.h>

#include "helpers.hpp"
#include "mckay/basis.hpp"

using namespace mckay;
using testutil::small_groups;

namespace {

// Independent membership oracle for B(G): a monomial is reduced iff none of
// its nonconstant divisors is invariant.  Scans divisors directly instead
// of going through the invariant generator list.
bool reduced_by_divisor_scan(const GroupParams& g, const Monomial& t) {
  for (Int m = 0; m <= t.m; ++m)
    for (Int n = 0; n <= t.n; ++n) {
      if (m == 0 && n == 0) continue;
      if (monomial_character(g, m, n).value == 0) return false;
    }
  return true;
}

MonomialSet ms(std::vector<Monomial> v) { return MonomialSet(std::move(v)); }

}  // namespace

TEST_SUITE("basis") {
  TEST_CASE("invariant generators") {
    CHECK(invariant_generators(make_group(7, 3)) ==
          ms({{1, 2}, {4, 1}, {7, 0}, {0, 7}}));
    CHECK(invariant_generators(make_group(2, 1)) == ms({{1, 1}, {2, 0}, {0, 2}}));
    for (const Int r : {3, 5, 8, 13})
      CHECK(invariant_generators(make_group(r, r - 1)).contains({1, 1}));
  }

  TEST_CASE("g_basis frozen examples") {
    std::vector<Monomial> expected{{0, 0}, {1, 1}, {2, 1}, {3, 1}};
    for (Int k = 1; k < 7; ++k) {
      expected.push_back({k, 0});
      expected.push_back({0, k});
    }
    CHECK(g_basis(make_group(7, 3)) == ms(expected));
    CHECK(g_basis(make_group(7, 3)).size() == 16);

    CHECK(g_basis(make_group(4, 1)) ==
          ms({{0, 0}, {1, 0}, {2, 0}, {3, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 1}, {2, 1}, {1, 2}}));

    for (const Int r : {2, 3, 6, 10}) {
      const GroupParams g = make_group(r, r - 1);
      CHECK(g_basis(g) == l_space(g));
      CHECK(g_basis(g).size() == static_cast<std::size_t>(2 * r - 1));
    }
  }

  TEST_CASE("g_basis agrees with the divisor-scan oracle") {
    for (const GroupParams& g : small_groups(16)) {
      const MonomialSet basis = g_basis(g);
      for (Int m = 0; m <= g.r(); ++m)
        for (Int n = 0; n <= g.r(); ++n)
          CHECK(basis.contains({m, n}) == reduced_by_divisor_scan(g, {m, n}));
    }
  }

  TEST_CASE("l_space") {
    CHECK(l_space(make_group(2, 1)) == ms({{0, 0}, {1, 0}, {0, 1}}));
    CHECK(l_space(make_group(7, 3)).size() == 13);
    for (const GroupParams& g : small_groups(20))
      CHECK(l_space(g).size() == static_cast<std::size_t>(2 * g.r() - 1));
  }

  TEST_CASE("special_reps on the worked example") {
    const SpecialReport rep = special_reps(make_group(7, 3));
    CHECK(rep.specials == std::vector<CharIndex>{{1}, {2}, {3}});
    CHECK(rep.generator_pairs.at(CharIndex{1}) == std::pair{Monomial{1, 0}, Monomial{0, 5}});
    CHECK(rep.generator_pairs.at(CharIndex{2}) == std::pair{Monomial{2, 0}, Monomial{0, 3}});
    CHECK(rep.generator_pairs.at(CharIndex{3}) == std::pair{Monomial{3, 0}, Monomial{0, 1}});
    CHECK(rep.nonspecial_witnesses.at(CharIndex{4}) == Monomial{1, 1});
    CHECK(rep.nonspecial_witnesses.at(CharIndex{5}) == Monomial{2, 1});
    CHECK(rep.nonspecial_witnesses.at(CharIndex{6}) == Monomial{3, 1});
  }

  TEST_CASE("special_reps families") {
    for (const Int r : {2, 3, 4, 5, 6, 11}) {
      const SpecialReport rep = special_reps(make_group(r, r - 1));
      CHECK(rep.specials.size() == static_cast<std::size_t>(r - 1));
      CHECK(rep.nonspecial_witnesses.empty());
    }
    const SpecialReport rep41 = special_reps(make_group(4, 1));
    CHECK(rep41.specials == std::vector<CharIndex>{{1}});
    CHECK(rep41.nonspecial_witnesses.at(CharIndex{2}) == Monomial{1, 1});
    CHECK(rep41.nonspecial_witnesses.at(CharIndex{3}) == Monomial{2, 1});
  }

  TEST_CASE("module_generators") {
    const GroupParams g = make_group(7, 3);
    CHECK(module_generators(g, CharIndex{2}) == ms({{2, 0}, {0, 3}}));
    CHECK(module_generators(g, CharIndex{4}) == ms({{4, 0}, {1, 1}, {0, 6}}));
    CHECK(module_generators(g, CharIndex{0}) == ms({{0, 0}}));
    for (const GroupParams& h : small_groups(10))
      CHECK(module_generators(h, CharIndex{0}) == ms({{0, 0}}));
  }

  TEST_CASE("surjectivity_oracle") {
    const GroupParams g = make_group(7, 3);
    CHECK(surjectivity_oracle(g, CharIndex{1}));
    CHECK(surjectivity_oracle(g, CharIndex{2}));
    CHECK(surjectivity_oracle(g, CharIndex{3}));
    CHECK_FALSE(surjectivity_oracle(g, CharIndex{4}));
    CHECK_FALSE(surjectivity_oracle(g, CharIndex{5}));
    CHECK_FALSE(surjectivity_oracle(g, CharIndex{6}));
    CHECK_THROWS_AS(surjectivity_oracle(g, CharIndex{0}), TrivialIndexError);

    const GroupParams a4 = make_group(5, 4);
    for (Int i = 1; i < 5; ++i) CHECK(surjectivity_oracle(a4, CharIndex{i}));
  }

  TEST_CASE("three speciality criteria agree") {
    for (const GroupParams& g : small_groups(20)) {
      const SpecialReport rep = special_reps(g);
      for (Int i = 1; i < g.r(); ++i) {
        const bool by_membership = rep.is_special(CharIndex{i});
        const bool by_count = module_generators(g, CharIndex{i}).size() == 2;
        const bool by_oracle = surjectivity_oracle(g, CharIndex{i});
        CHECK(by_membership == by_count);
        CHECK(by_count == by_oracle);
      }
    }
  }

  TEST_CASE("structural properties of B(G) and L(G)") {
    for (const GroupParams& g : small_groups(16)) {
      const MonomialSet basis = g_basis(g);
      const MonomialSet l = l_space(g);
      const Int r = g.r();

      for (const Monomial& t : l) CHECK(basis.contains(t));
      CHECK((basis == l) == is_in_sl2(g));
      CHECK(basis.size() >= static_cast<std::size_t>(2 * r - 1));
      CHECK(basis.size() <= static_cast<std::size_t>(r * r));

      std::set<Int> classes;
      for (const Monomial& t : basis) {
        CHECK(t.m < r);
        CHECK(t.n < r);
        classes.insert(character_of(g, t).value);
      }
      CHECK(classes.size() == static_cast<std::size_t>(r));

      const Int a_inv = mod_inverse(g.a(), r);
      for (Int i = 1; i < r; ++i) {
        const MonomialSet gens = module_generators(g, CharIndex{i});
        CHECK(gens.size() >= 2);
        CHECK(gens.contains({i, 0}));
        CHECK(gens.contains({0, mod_reduce(a_inv * i, r)}));
      }
    }
  }
}
