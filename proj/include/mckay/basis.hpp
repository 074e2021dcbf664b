#pragma once

#include <map>
#include <utility>
#include <vector>

#include "mckay/monomial.hpp"

namespace mckay {

/// Divisibility-minimal nonconstant invariant monomials of C_{r,a}.
/// Computed from the box [0, r]^2, which suffices because x^r and y^r are
/// invariant.
MonomialSet invariant_generators(const GroupParams& g);

/// The G-basis B(G): monomials divisible by no nonconstant invariant
/// monomial.  Finite; every element has both exponents below r.
MonomialSet g_basis(const GroupParams& g);

/// The L-space {1, x, ..., x^{r-1}, y, ..., y^{r-1}}.
MonomialSet l_space(const GroupParams& g);

/// Divisibility-minimal generators of the character-i semi-invariants as a
/// module over the invariant ring.  Equals B(G) restricted to character i:
/// a monomial generates iff no nonconstant invariant monomial divides it.
MonomialSet module_generators(const GroupParams& g, CharIndex i);

/// Independent speciality test for a nontrivial character i, by checking
/// surjectivity of multiplication into the twisted 2-forms at the monomial
/// level: every module generator of character i - a - 1 must factor off a
/// divisor of character i.  Shares no logic with the B(G)\L(G) membership
/// route.  Throws TrivialIndexError for i = 0.
bool surjectivity_oracle(const GroupParams& g, CharIndex i);

/// Speciality of every nontrivial character.  Special characters carry
/// their two-element generator pair (x^i, y^{j_i}) with a*j_i = i mod r;
/// non-special ones carry the graded-lex-least witness monomial of that
/// character in B(G)\L(G).
struct SpecialReport {
  std::vector<CharIndex> specials;
  std::map<CharIndex, std::pair<Monomial, Monomial>> generator_pairs;
  std::map<CharIndex, Monomial> nonspecial_witnesses;

  bool is_special(CharIndex i) const {
    return generator_pairs.contains(i);
  }
};

SpecialReport special_reps(const GroupParams& g);

}  // namespace mckay
