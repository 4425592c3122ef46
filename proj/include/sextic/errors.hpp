#pragma once

#include <stdexcept>
#include <string>

namespace sextic {

/// Base of every error raised by the library. The CLI maps subclasses to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ArithmeticError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// A polynomial was expected to be squarefree.
class NotSquarefree : public Error {
 public:
  using Error::Error;
};

/// Zero or otherwise unusable polynomial input.
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

/// Rational reconstruction failed; more primes are needed.
class ReconstructFailed : public Error {
 public:
  using Error::Error;
};

/// The S-pair budget of a Groebner run was exhausted.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// A linear system had a dimension other than the generic one.
class UnexpectedDimension : public Error {
 public:
  using Error::Error;
};

/// A point configuration is invalid or not in general position.
class DegenerateConfiguration : public Error {
 public:
  using Error::Error;
};

/// Bounded retries with random coordinate changes did not reach a generic projection.
class GenericityFailure : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// Named failure modes of specific operations, grouped under the broad kinds above.
#define SEXTIC_ERROR(name, base) \
  class name : public base {    \
   public:                      \
    using base::base;           \
  };
SEXTIC_ERROR(NotPrincipal, DegenerateConfiguration)
SEXTIC_ERROR(NonGenericVanishing, DegenerateConfiguration)
SEXTIC_ERROR(NotTriplePoint, DegenerateConfiguration)
SEXTIC_ERROR(SpecializationDegenerate, DegenerateConfiguration)
SEXTIC_ERROR(NotConjStable, Error)
SEXTIC_ERROR(SingularSystem, GenericityFailure)
SEXTIC_ERROR(ProjectionDegenerate, GenericityFailure)
SEXTIC_ERROR(InterpolationUnstable, Error)
SEXTIC_ERROR(WrongResidualDegree, InternalError)
SEXTIC_ERROR(CrossCheckFailed, InternalError)
#undef SEXTIC_ERROR

}  // namespace sextic
