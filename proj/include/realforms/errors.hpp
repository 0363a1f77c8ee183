#pragma once

#include <stdexcept>
#include <string>

namespace realforms {

/// Base class of every failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define REALFORMS_ERROR(Name)             \
  class Name : public Error {             \
   public:                                \
    using Error::Error;                   \
  }

// elliptic
REALFORMS_ERROR(ZeroDiscriminant);
REALFORMS_ERROR(PrecisionExhausted);
REALFORMS_ERROR(NotAllReal);
REALFORMS_ERROR(NoRealAssociates);
REALFORMS_ERROR(InflectionPoint);
REALFORMS_ERROR(PreconditionViolated);

// picgroup / lattice
REALFORMS_ERROR(RepeatedPoint);
REALFORMS_ERROR(DimensionMismatch);
REALFORMS_ERROR(IdentityViolated);

// verifier
REALFORMS_ERROR(UnexpectedSolution);
REALFORMS_ERROR(NotPhiCompatible);
REALFORMS_ERROR(InconsistentPipeline);
REALFORMS_ERROR(ConstraintViolated);
REALFORMS_ERROR(NonRealConfiguration);

// construct
REALFORMS_ERROR(SearchExhausted);
REALFORMS_ERROR(LabellingAmbiguous);
REALFORMS_ERROR(CollinearTriple);

// cli
REALFORMS_ERROR(ParseError);
REALFORMS_ERROR(StepMismatch);

#undef REALFORMS_ERROR

/// Raised by interval evaluation when an enclosure is too wide for the
/// requested operation (e.g. dividing by an interval that contains zero).
/// Callers catch it and retry at a higher precision.
class InsufficientPrecision : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace realforms
