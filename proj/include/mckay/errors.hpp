#pragma once

#include <stdexcept>

namespace mckay {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// gcd(r, a) != 1: the diagonal action is not free outside the origin.
class NotSmallError : public Error {
 public:
  using Error::Error;
};

/// r <= 1: the trivial group has no singularity to resolve.
class TrivialGroupError : public Error {
 public:
  using Error::Error;
};

/// a = 0 mod r: the second coordinate would carry the trivial action.
class BadExponentError : public Error {
 public:
  using Error::Error;
};

/// Monomial exponents must be non-negative.
class NegativeExponentError : public Error {
 public:
  using Error::Error;
};

/// The trivial character was passed where a nontrivial one is required.
class TrivialIndexError : public Error {
 public:
  using Error::Error;
};

/// A lattice relation on the Newton boundary failed to be integral; this
/// indicates a bug in the hull computation, not bad user input.
class NonIntegralRelationError : public Error {
 public:
  using Error::Error;
};

/// A cluster ideal generator carries a nontrivial character that is not
/// special.  Valid clusters never do this, so it signals an internal
/// inconsistency rather than bad input.
class NonSpecialCotangentError : public Error {
 public:
  using Error::Error;
};

/// A cluster ideal has more than three minimal generators, so the
/// two-parameter deformation shape does not apply.
class TooManyGeneratorsError : public Error {
 public:
  using Error::Error;
};

/// Cluster incidence data did not assemble into a simple path.
class NotAChainError : public Error {
 public:
  using Error::Error;
};

/// The operation is only defined for subgroups of SL(2,C).
class NotSL2Error : public Error {
 public:
  using Error::Error;
};

/// Filesystem output failed.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace mckay
