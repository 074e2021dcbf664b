#pragma once

#include <compare>
#include <cstdint>
#include <utility>

#include "mckay/errors.hpp"
#include "mckay/rational.hpp"

namespace mckay {

using Int = std::int64_t;

/// Representative of v mod r in [0, r).
Int mod_reduce(Int v, Int r);

/// Inverse of a mod r; requires gcd(a, r) = 1.
Int mod_inverse(Int a, Int r);

/// Index i of the irreducible character eps^i of a cyclic group; the
/// trivial character has index 0.  Always stored reduced mod the order.
struct CharIndex {
  Int value = 0;
  friend auto operator<=>(const CharIndex&, const CharIndex&) = default;
};

/// The element g^k of a cyclic group, k reduced mod the order.
struct GroupElement {
  Int k = 0;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

/// The cyclic group C_{r,a} in GL(2,C) generated by diag(eps, eps^a) with
/// eps a primitive r-th root of unity.  Instances are always valid:
/// r >= 2, 1 <= a <= r-1 and gcd(r, a) = 1 (the smallness condition for a
/// diagonal cyclic group).  Construct through make_group.
class GroupParams {
 public:
  Int r() const { return r_; }
  Int a() const { return a_; }

  friend auto operator<=>(const GroupParams&, const GroupParams&) = default;
  friend GroupParams make_group(Int r, Int a);

 private:
  GroupParams(Int r, Int a) : r_(r), a_(a) {}
  Int r_;
  Int a_;
};

/// Validates (r, a) and reduces a mod r.  Throws TrivialGroupError for
/// r <= 1, BadExponentError for a = 0 mod r and NotSmallError when
/// gcd(r, a) != 1.
GroupParams make_group(Int r, Int a);

/// The element g^k, with k reduced mod r.
GroupElement make_element(const GroupParams& g, Int k);

/// True iff det = eps^{1+a} is trivial, i.e. 1 + a = 0 mod r.
bool is_in_sl2(const GroupParams& g);

/// Weight of x^m y^n: the integer m + a*n.  Throws NegativeExponentError.
Int monomial_weight(const GroupParams& g, Int m, Int n);

/// Character of x^m y^n: the weight reduced mod r.
CharIndex monomial_character(const GroupParams& g, Int m, Int n);

/// CharIndex with the value reduced mod r.
CharIndex char_index(const GroupParams& g, Int v);

/// age(g^k) = (<k> + <a k>)/r with <.> the representative in [0, r).
/// Zero exactly on the identity; lies in [0, 2).
Rational age(const GroupParams& g, GroupElement e);

/// Characters acting on the two coordinates: (1, a mod r).
std::pair<CharIndex, CharIndex> natural_rep_summands(const GroupParams& g);

}  // namespace mckay
