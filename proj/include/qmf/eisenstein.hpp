#pragma once

#include <array>

#include "qmf/errors.hpp"
#include "qmf/fraction.hpp"
#include "qmf/series.hpp"

namespace qmf {

struct RamanujanSeries {
  QSeries t1, t2, t3;
};

/// q-expansion of the solution of
///   a D t1 = t1^2 - t2/12,  a D t2 = 4 t1 t2 - 6 t3,  a D t3 = 6 t1 t3 - t2^2/3
/// with a = 12b, D = q d/dq, starting at (b, 12b^2, 8b^3) with first-order
/// vector c(-24b, 2880b^2, -4032b^3). With b = 1/12, c = 1 this is
/// (E2/12, E4/12, E6/216). Valid through q^N.
RamanujanSeries solve_ramanujan(long N, const Rational& b = Rational(1, 12), const Rational& c = Rational(1));

/// E_2, E_4, E_6 for k = 1, 2, 3 from divisor sums: 1 + b_k sum sigma_{2k-1}(n) q^n.
QSeries eisenstein_divisor(int k, long N);

/// sum_{d | n} d^e
BigInt divisor_sum(long n, int e);

/// Residuals of the three equations for a candidate triple (b = 1/12 normalization).
std::array<QSeries, 3> ramanujan_residual(const RamanujanSeries& t);

struct QuasiModularPoly {
  Poly p;
  int weight = 0;
  int diff_order = 0;

  /// Throws Error when p is not weighted-homogeneous in t1, t2, t3.
  static QuasiModularPoly from(const Poly& p);
};

/// f -> df(R) for the Ramanujan field R.
QuasiModularPoly ring_derivation(const QuasiModularPoly& f);

/// Element [[k, k'], [0, 1/k]] of the upper triangular group.
struct GroupElement {
  Rational k{1};
  Rational kp{0};
};
GroupElement group_product(const GroupElement& g1, const GroupElement& g2);

/// t.g = (t1 k^-2 + k' k^-1, t2 k^-4, t3 k^-6). F is any ring containing
/// the rationals (scalars, polynomials). k' may live in F so that it can be
/// kept symbolic.
template <class F>
std::array<F, 3> group_action(const std::array<F, 3>& t, const Rational& k, const F& kp) {
  if (k.is_zero()) throw ZeroScale("group action with k = 0");
  const Rational ki = k.inverse();
  return {t[0] * F(pow(ki, 2)) + kp * F(ki), t[1] * F(pow(ki, 4)), t[2] * F(pow(ki, 6))};
}

template <class F>
std::array<F, 3> group_action(const std::array<F, 3>& t, const GroupElement& g) {
  return group_action(t, g.k, F(g.kp));
}

/// f_i: coefficient of x^i in f(t1 + x, t2, t3).
Poly taylor_in_t1(const Poly& f, int i);

}  // namespace qmf
