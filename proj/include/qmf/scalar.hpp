#pragma once

#include <string>

#include <Eigen/Core>

#include "qmf/cyclo.hpp"
#include "qmf/rational.hpp"

namespace qmf {

// Exact coefficient scalars used by the templated containers: Rational, Cyclo.

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const Cyclo& x) { return x.is_zero(); }

inline std::string to_string(const Rational& x) { return x.str(); }
inline std::string to_string(const Cyclo& x) { return x.str(); }

/// True for a scalar whose printed form needs parentheses inside a product.
inline bool is_compound(const Rational&) { return false; }
inline bool is_compound(const Cyclo& x) { return !x.is_rational() && !x.a().is_zero(); }

/// Sign used when printing a leading "-": negative rationals only.
inline bool prints_negative(const Rational& x) { return x.sign() < 0; }
inline bool prints_negative(const Cyclo& x) { return x.is_rational() && x.a().sign() < 0; }

/// Exact n-th root; false when none exists in the field (Cyclo: rational values only).
inline bool exact_root(const Cyclo& value, unsigned n, Cyclo& root) {
  if (!value.is_rational()) return false;
  Rational r;
  if (!exact_root(value.a(), n, r)) return false;
  root = Cyclo(r);
  return true;
}

template <class S>
S scalar_from_rational(const Rational& r) {
  return S(r);
}

}  // namespace qmf

namespace Eigen {

template <>
struct NumTraits<qmf::Rational> : GenericNumTraits<qmf::Rational> {
  using Real = qmf::Rational;
  using NonInteger = qmf::Rational;
  using Nested = qmf::Rational;
  using Literal = qmf::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 50,
    MulCost = 100
  };
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<qmf::Cyclo> : GenericNumTraits<qmf::Cyclo> {
  using Real = qmf::Cyclo;
  using NonInteger = qmf::Cyclo;
  using Nested = qmf::Cyclo;
  using Literal = qmf::Cyclo;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 20,
    AddCost = 100,
    MulCost = 400
  };
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
