#include "mckay/group.hpp"

#include <numeric>
#include <string>

namespace mckay {

Int mod_reduce(Int v, Int r) {
  Int m = v % r;
  return m < 0 ? m + r : m;
}

Int mod_inverse(Int a, Int r) {
  // extended Euclid on (a mod r, r)
  Int t = 0, new_t = 1;
  Int rem = r, new_rem = mod_reduce(a, r);
  while (new_rem != 0) {
    const Int q = rem / new_rem;
    t = std::exchange(new_t, t - q * new_t);
    rem = std::exchange(new_rem, rem - q * new_rem);
  }
  if (rem != 1) throw Error("mod_inverse: " + std::to_string(a) + " is not a unit mod " + std::to_string(r));
  return mod_reduce(t, r);
}

GroupParams make_group(Int r, Int a) {
  if (r <= 1)
    throw TrivialGroupError("group order must be at least 2, got r = " + std::to_string(r));
  const Int a_red = mod_reduce(a, r);
  if (a_red == 0)
    throw BadExponentError("action exponent is 0 mod r for (r, a) = (" + std::to_string(r) + ", " +
                           std::to_string(a) + ")");
  if (std::gcd(r, a_red) != 1)
    throw NotSmallError("C_{" + std::to_string(r) + "," + std::to_string(a_red) +
                        "} is not small: gcd(r, a) = " + std::to_string(std::gcd(r, a_red)));
  return GroupParams(r, a_red);
}

GroupElement make_element(const GroupParams& g, Int k) { return GroupElement{mod_reduce(k, g.r())}; }

bool is_in_sl2(const GroupParams& g) { return mod_reduce(1 + g.a(), g.r()) == 0; }

Int monomial_weight(const GroupParams& g, Int m, Int n) {
  if (m < 0 || n < 0)
    throw NegativeExponentError("monomial exponents must be non-negative, got (" + std::to_string(m) +
                                ", " + std::to_string(n) + ")");
  return m + g.a() * n;
}

CharIndex monomial_character(const GroupParams& g, Int m, Int n) {
  return CharIndex{mod_reduce(monomial_weight(g, m, n), g.r())};
}

CharIndex char_index(const GroupParams& g, Int v) { return CharIndex{mod_reduce(v, g.r())}; }

Rational age(const GroupParams& g, GroupElement e) {
  const Int k = mod_reduce(e.k, g.r());
  return Rational(mod_reduce(k, g.r()) + mod_reduce(g.a() * k, g.r()), g.r());
}

std::pair<CharIndex, CharIndex> natural_rep_summands(const GroupParams& g) {
  return {CharIndex{1}, CharIndex{g.a()}};
}

}  // namespace mckay
