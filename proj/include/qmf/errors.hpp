#pragma once

#include <stdexcept>
#include <string>

namespace qmf {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define QMF_DECLARE_ERROR(Name)            \
  class Name : public Error {              \
   public:                                 \
    explicit Name(const std::string& what) \
        : Error(#Name ": " + what) {}      \
  }

// numeric-core
QMF_DECLARE_ERROR(DivisionByZero);
QMF_DECLARE_ERROR(ConductorMismatch);
QMF_DECLARE_ERROR(ParseError);

// qseries
QMF_DECLARE_ERROR(NonUnitDivisor);
QMF_DECLARE_ERROR(InvalidValuation);
QMF_DECLARE_ERROR(NotRevertible);
QMF_DECLARE_ERROR(RootObstruction);
QMF_DECLARE_ERROR(TruncationError);

// linear algebra / gauss-manin
QMF_DECLARE_ERROR(SolveFailure);
QMF_DECLARE_ERROR(NonUniqueSolution);
QMF_DECLARE_ERROR(NoSolution);

// eisenstein
QMF_DECLARE_ERROR(ZeroScale);

// arith
QMF_DECLARE_ERROR(NotPrime);
QMF_DECLARE_ERROR(PrimeTooSmall);

// periods
QMF_DECLARE_ERROR(BadC);
QMF_DECLARE_ERROR(ConvergenceFailure);
QMF_DECLARE_ERROR(OutOfDomain);

#undef QMF_DECLARE_ERROR

}  // namespace qmf
