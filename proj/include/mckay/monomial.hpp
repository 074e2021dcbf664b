#pragma once

#include <string>
#include <vector>

#include "mckay/group.hpp"

namespace mckay {

/// The monomial x^m y^n, m, n >= 0.
struct Monomial {
  Int m = 0;
  Int n = 0;

  Int degree() const { return m + n; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Canonical order: by total degree, then by x-exponent descending, so x^2
/// comes before xy which comes before y^2.
bool graded_lex_less(const Monomial& lhs, const Monomial& rhs);

struct GradedLexLess {
  bool operator()(const Monomial& lhs, const Monomial& rhs) const {
    return graded_lex_less(lhs, rhs);
  }
};

bool divides(const Monomial& d, const Monomial& t);
Monomial operator*(const Monomial& lhs, const Monomial& rhs);

/// t / d; requires divides(d, t).
Monomial quotient(const Monomial& t, const Monomial& d);

/// "1", "x^2", "x y^3", ...
std::string to_string(const Monomial& t);

CharIndex character_of(const GroupParams& g, const Monomial& t);
Int weight_of(const GroupParams& g, const Monomial& t);

/// Exponent vector in the dual lattice; entries may be negative.
struct ExponentVector {
  Int m = 0;
  Int n = 0;
  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
};

std::string to_string(const ExponentVector& w);

/// A finite set of monomials kept in canonical graded-lex order with no
/// duplicates, so equality is set equality and serializations are stable.
class MonomialSet {
 public:
  MonomialSet() = default;
  explicit MonomialSet(std::vector<Monomial> elems);

  const std::vector<Monomial>& elements() const { return elems_; }
  bool contains(const Monomial& t) const;
  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }

  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }

  friend bool operator==(const MonomialSet&, const MonomialSet&) = default;

 private:
  std::vector<Monomial> elems_;
};

/// The divisibility-minimal elements of a set of monomials.
MonomialSet divisibility_minimal(const std::vector<Monomial>& items);

}  // namespace mckay
