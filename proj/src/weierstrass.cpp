#include "qmf/weierstrass.hpp"

#include <algorithm>

namespace qmf {

Poly LaurentZSeries::coeff(int k) const {
  if (k < lo_ || k > hi()) return Poly();
  return c_[static_cast<std::size_t>(k - lo_)];
}

LaurentZSeries LaurentZSeries::derivative() const {
  LaurentZSeries r(lo_ - 1, hi() - 1);
  for (int k = lo_; k <= hi(); ++k) r.at(k - 1) = coeff(k) * Poly(k);
  return r;
}

bool LaurentZSeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Poly& p) { return p.is_zero(); });
}

namespace {
LaurentZSeries combine(const LaurentZSeries& a, const LaurentZSeries& b, bool negate) {
  LaurentZSeries r(std::min(a.lo(), b.lo()), std::min(a.hi(), b.hi()));
  for (int k = r.lo(); k <= r.hi(); ++k) r.at(k) = negate ? a.coeff(k) - b.coeff(k) : a.coeff(k) + b.coeff(k);
  return r;
}
}  // namespace

LaurentZSeries operator+(const LaurentZSeries& a, const LaurentZSeries& b) { return combine(a, b, false); }
LaurentZSeries operator-(const LaurentZSeries& a, const LaurentZSeries& b) { return combine(a, b, true); }

LaurentZSeries operator*(const Poly& s, const LaurentZSeries& a) {
  LaurentZSeries r = a;
  for (auto& c : r.c_) c = c * s;
  return r;
}

LaurentZSeries operator*(const LaurentZSeries& a, const LaurentZSeries& b) {
  const int hi = std::min(a.hi() + b.lo(), b.hi() + a.lo());
  LaurentZSeries r(a.lo() + b.lo(), hi);
  for (int i = a.lo(); i <= a.hi(); ++i) {
    const Poly& ai = a.c_[static_cast<std::size_t>(i - a.lo())];
    if (ai.is_zero()) continue;
    for (int j = b.lo(); j <= b.hi() && i + j <= hi; ++j) {
      const Poly& bj = b.c_[static_cast<std::size_t>(j - b.lo())];
      if (!bj.is_zero()) r.at(i + j) += ai * bj;
    }
  }
  return r;
}

namespace {
// y^2 - 4x^3 + t2 x + t3 for x = z^-2 + ... through z^hi
LaurentZSeries residual_of(const LaurentZSeries& x) {
  const LaurentZSeries y = x.derivative();
  LaurentZSeries r = y * y - Poly(4) * (x * x * x) + Poly::var(T2) * x;
  if (r.hi() >= 0) r.at(0) += Poly::var(T3);
  return r;
}
}  // namespace

WeierstrassExpansion weierstrass_expansion(int K) {
  if (K < 1) throw Error("weierstrass_expansion needs K >= 1");
  LaurentZSeries x(-2, 2 * K);
  x.at(-2) = Poly(1);
  // a_j enters the z^(j-4) coefficient of the residual as -(4j + 12) a_j
  for (int j = -1; j <= 2 * K; ++j) {
    const Poly r = residual_of(x).coeff(j - 4);
    x.at(j) = r * Poly(Rational(1, 4 * (j + 3)));
  }
  return {x, x.derivative()};
}

LaurentZSeries curve_residual(const WeierstrassExpansion& e) { return residual_of(e.x); }

std::vector<Poly> weierstrass_recursion(int kmax) {
  std::vector<Poly> c(static_cast<std::size_t>(std::max(kmax, 3) + 1));
  c[2] = Poly::var(T2) * Poly(Rational(1, 20));
  c[3] = Poly::var(T3) * Poly(Rational(1, 28));
  for (int k = 4; k <= kmax; ++k) {
    Poly s;
    for (int m = 2; m <= k - 2; ++m) s += c[static_cast<std::size_t>(m)] * c[static_cast<std::size_t>(k - m)];
    c[static_cast<std::size_t>(k)] = s * Poly(Rational(3, (2 * k + 1) * (k - 3)));
  }
  c.resize(static_cast<std::size_t>(kmax + 1));
  return c;
}

QuasiModularPoly eisenstein_modular(int k) {
  if (k < 1) throw Error("eisenstein_modular needs k >= 1");
  const QuasiModularPoly q = QuasiModularPoly::from(weierstrass_expansion(k).x.coeff(2 * k));
  if (q.weight != 2 * k + 2 || q.diff_order != 0) throw Error("eisenstein_modular: unexpected grading");
  return q;
}

}  // namespace qmf
