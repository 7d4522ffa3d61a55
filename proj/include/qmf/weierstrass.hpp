#pragma once

#include <vector>

#include "qmf/eisenstein.hpp"
#include "qmf/polynomial.hpp"

namespace qmf {

/// sum_{k=lo}^{hi} c_k z^k with coefficients in Q[t2, t3]; exact through z^hi.
class LaurentZSeries {
 public:
  LaurentZSeries(int lo, int hi) : lo_(lo), c_(static_cast<std::size_t>(std::max(hi - lo + 1, 0))) {}

  [[nodiscard]] int lo() const { return lo_; }
  [[nodiscard]] int hi() const { return lo_ + static_cast<int>(c_.size()) - 1; }
  /// zero outside [lo, hi]
  [[nodiscard]] Poly coeff(int k) const;
  Poly& at(int k) { return c_.at(static_cast<std::size_t>(k - lo_)); }

  [[nodiscard]] LaurentZSeries derivative() const;
  [[nodiscard]] bool is_zero() const;

  friend LaurentZSeries operator+(const LaurentZSeries& a, const LaurentZSeries& b);
  friend LaurentZSeries operator-(const LaurentZSeries& a, const LaurentZSeries& b);
  friend LaurentZSeries operator*(const Poly& s, const LaurentZSeries& a);
  /// valid through min(a.hi + b.lo, b.hi + a.lo)
  friend LaurentZSeries operator*(const LaurentZSeries& a, const LaurentZSeries& b);

 private:
  int lo_;
  std::vector<Poly> c_;
};

struct WeierstrassExpansion {
  LaurentZSeries x;  // through z^(2K)
  LaurentZSeries y;  // through z^(2K-1)
  /// coefficient of z^(2k) in x
  [[nodiscard]] Poly g(int two_k_plus_two) const { return x.coeff(two_k_plus_two - 2); }
};

/// x, y in the analytic coordinate z (dx = y dz) on y^2 = 4x^3 - t2 x - t3,
/// with x - 1/z^2 determined order by order from the curve equation.
WeierstrassExpansion weierstrass_expansion(int K);

/// y^2 - 4x^3 + t2 x + t3, exact through z^(2K-4).
LaurentZSeries curve_residual(const WeierstrassExpansion& e);

/// c_2 = t2/20, c_3 = t3/28, c_k = 3/((2k+1)(k-3)) sum_{m=2}^{k-2} c_m c_{k-m};
/// entry k (k >= 2) is the coefficient of z^(2k-2).
std::vector<Poly> weierstrass_recursion(int kmax);

/// G_{2k+2}: the coefficient of z^(2k) in x, weight 2k+2, differential order 0.
QuasiModularPoly eisenstein_modular(int k);

}  // namespace qmf
