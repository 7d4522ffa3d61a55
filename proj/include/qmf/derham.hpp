#pragma once

#include <string>

#include "qmf/fraction.hpp"

namespace qmf {

/// alpha * dx/y + beta * x dx/y
struct CohomClass {
  Fraction alpha;
  Fraction beta;

  friend bool operator==(const CohomClass& a, const CohomClass& b) { return a.alpha == b.alpha && a.beta == b.beta; }
  friend CohomClass operator+(const CohomClass& a, const CohomClass& b) { return {a.alpha + b.alpha, a.beta + b.beta}; }
  [[nodiscard]] std::string str() const;
};

/// y^2 = P(x) = 4(x-t1)^3 - t2(x-t1) - t3 and its discriminant.
struct CurveFamily {
  static const Poly& P();
  static const Poly& dP();  // dP/dx
  static const Poly& delta();
};

/// Class of C dx/y in the basis {dx/y, x dx/y}; C is polynomial in x over Q[t1,t2,t3].
CohomClass reduce(const Poly& C);

/// d(x^a y) = (P'x^a/2 + a x^(a-1) P) dx/y.
Poly exact_generator(int a);

struct Cofactors {
  Poly a1;
  Poly a2;
};

/// Delta = -P' a1 + P a2 with deg_x a1 <= 4 and a2 a combination of P and 1.
Cofactors cofactors();

}  // namespace qmf
