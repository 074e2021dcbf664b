#include "mckay/monomial.hpp"

#include <algorithm>

namespace mckay {

bool graded_lex_less(const Monomial& lhs, const Monomial& rhs) {
  if (lhs.degree() != rhs.degree()) return lhs.degree() < rhs.degree();
  return lhs.m > rhs.m;
}

bool divides(const Monomial& d, const Monomial& t) { return d.m <= t.m && d.n <= t.n; }

Monomial operator*(const Monomial& lhs, const Monomial& rhs) {
  return Monomial{lhs.m + rhs.m, lhs.n + rhs.n};
}

Monomial quotient(const Monomial& t, const Monomial& d) {
  if (!divides(d, t))
    throw Error("quotient: " + to_string(d) + " does not divide " + to_string(t));
  return Monomial{t.m - d.m, t.n - d.n};
}

namespace {

std::string power(const char* var, Int e) {
  if (e == 0) return "";
  if (e == 1) return var;
  return std::string(var) + "^" + std::to_string(e);
}

}  // namespace

std::string to_string(const Monomial& t) {
  if (t.m == 0 && t.n == 0) return "1";
  std::string sx = power("x", t.m);
  std::string sy = power("y", t.n);
  if (sx.empty()) return sy;
  if (sy.empty()) return sx;
  return sx + " " + sy;
}

std::string to_string(const ExponentVector& w) {
  return "(" + std::to_string(w.m) + ", " + std::to_string(w.n) + ")";
}

CharIndex character_of(const GroupParams& g, const Monomial& t) {
  return monomial_character(g, t.m, t.n);
}

Int weight_of(const GroupParams& g, const Monomial& t) { return monomial_weight(g, t.m, t.n); }

MonomialSet::MonomialSet(std::vector<Monomial> elems) : elems_(std::move(elems)) {
  std::sort(elems_.begin(), elems_.end(), GradedLexLess{});
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

bool MonomialSet::contains(const Monomial& t) const {
  return std::binary_search(elems_.begin(), elems_.end(), t, GradedLexLess{});
}

MonomialSet divisibility_minimal(const std::vector<Monomial>& items) {
  MonomialSet sorted(items);
  std::vector<Monomial> minimal;
  for (const Monomial& t : sorted) {
    const bool reducible = std::any_of(minimal.begin(), minimal.end(),
                                       [&](const Monomial& d) { return divides(d, t); });
    if (!reducible) minimal.push_back(t);
  }
  return MonomialSet(std::move(minimal));
}

}  // namespace mckay
