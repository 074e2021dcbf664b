#include <doctest.h>

#include "helpers.hpp"
#include "mckay/group.hpp"

using namespace mckay;
using testutil::small_groups;

TEST_SUITE("group") {
  TEST_CASE("make_group validates and reduces the exponent") {
    const GroupParams g = make_group(7, 3);
    CHECK(g.r() == 7);
    CHECK(g.a() == 3);

    CHECK(make_group(7, 10).a() == 3);
    CHECK(make_group(5, -1).a() == 4);

    CHECK_THROWS_AS(make_group(6, 3), NotSmallError);
    CHECK_THROWS_AS(make_group(1, 1), TrivialGroupError);
    CHECK_THROWS_AS(make_group(0, 1), TrivialGroupError);
    CHECK_THROWS_AS(make_group(5, 5), BadExponentError);
    CHECK_THROWS_AS(make_group(4, -4), BadExponentError);
  }

  TEST_CASE("sl2 membership") {
    CHECK(is_in_sl2(make_group(7, 6)));
    CHECK_FALSE(is_in_sl2(make_group(7, 3)));
    CHECK(is_in_sl2(make_group(2, 1)));
  }

  TEST_CASE("monomial weights and characters") {
    const GroupParams g = make_group(7, 3);
    CHECK(monomial_character(g, 1, 1).value == 4);  // xy
    CHECK(monomial_character(g, 2, 1).value == 5);  // x^2 y
    CHECK(monomial_character(g, 3, 1).value == 6);  // x^3 y
    CHECK(monomial_character(g, 0, 0).value == 0);
    CHECK(monomial_weight(g, 3, 1) == 6);
    CHECK(monomial_weight(g, 0, 7) == 21);
    CHECK_THROWS_AS(monomial_character(g, -1, 0), NegativeExponentError);
    CHECK_THROWS_AS(monomial_weight(g, 0, -2), NegativeExponentError);
  }

  TEST_CASE("age") {
    const GroupParams g2 = make_group(2, 1);
    CHECK(age(g2, make_element(g2, 0)) == Rational(0));
    CHECK(age(g2, make_element(g2, 1)) == Rational(1));

    const GroupParams g = make_group(7, 3);
    CHECK(age(g, make_element(g, 0)) == Rational(0));
    CHECK(age(g, make_element(g, 2)) == Rational(8, 7));
  }

  TEST_CASE("natural representation splits into coordinate characters") {
    CHECK(natural_rep_summands(make_group(7, 3)) == std::pair{CharIndex{1}, CharIndex{3}});
    CHECK(natural_rep_summands(make_group(2, 1)) == std::pair{CharIndex{1}, CharIndex{1}});
    CHECK(natural_rep_summands(make_group(4, 1)) == std::pair{CharIndex{1}, CharIndex{1}});
  }

  TEST_CASE("ages of g^k and g^-k sum to 2; integer ages detect SL(2)") {
    for (const GroupParams& g : small_groups(25)) {
      bool all_one = true;
      for (Int k = 1; k < g.r(); ++k) {
        const Rational forward = age(g, make_element(g, k));
        const Rational backward = age(g, make_element(g, -k));
        CHECK(Rational(2) - forward == backward);
        all_one = all_one && forward == Rational(1);
      }
      CHECK(all_one == is_in_sl2(g));
    }
  }

  TEST_CASE("character map is additive and kills r-th powers") {
    for (const GroupParams& g : small_groups(12)) {
      CHECK(monomial_character(g, g.r(), 0).value == 0);
      CHECK(monomial_character(g, 0, g.r()).value == 0);
      for (Int m1 = 0; m1 <= 3; ++m1)
        for (Int n1 = 0; n1 <= 3; ++n1)
          for (Int m2 = 0; m2 <= 3; ++m2)
            for (Int n2 = 0; n2 <= 3; ++n2) {
              const Int sum =
                  monomial_character(g, m1, n1).value + monomial_character(g, m2, n2).value;
              CHECK(monomial_character(g, m1 + m2, n1 + n2).value == mod_reduce(sum, g.r()));
            }
    }
  }
}
