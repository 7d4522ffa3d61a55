#pragma once

#include <string>
#include <string_view>

#include "qmf/rational.hpp"

namespace qmf {

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 with integer coefficients.
struct WeierstrassCurve {
  long a1 = 0, a2 = 0, a3 = 0, a4 = 0, a6 = 0;

  static WeierstrassCurve short_form(long a, long b) { return {0, 0, 0, a, b}; }
  /// "y^2+y=x^3-x^2"; throws ParseError for anything that is not of this shape.
  static WeierstrassCurve parse(std::string_view text);
  [[nodiscard]] std::string str() const;
};

bool is_prime(long p);

struct PointCount {
  long Np = 0;  // affine solutions, no point at infinity
  long ap = 0;  // p - Np
};

/// Brute force over F_p^2. Throws NotPrime.
PointCount count_points(const WeierstrassCurve& E, long p);

/// U_0 = 1, U_1 = a, U_{j+1} = a U_j - p U_{j-1}
BigInt chebyshev_u(int k, long a, long p);

/// -(1/(p-1)) sum over (a, b) in F_p^2 with 4a^3 + 27b^2 != 0 of U_k(a_p(y^2 = x^3 + ax + b), p).
/// Throws PrimeTooSmall for p < 5, NotPrime, and Error for odd k.
Rational sigma_k(long p, int k);

}  // namespace qmf
