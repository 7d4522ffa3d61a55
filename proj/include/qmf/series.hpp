#pragma once

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "qmf/errors.hpp"
#include "qmf/scalar.hpp"

namespace qmf {

/// Truncated series sum_{k=k0}^{N} c_k q^(k/d). Everything at or beyond
/// q^((N+1)/d) is unknown. Coefficients are stored densely from k0 to N.
template <class S>
class PuiseuxSeries {
 public:
  using Scalar = S;

  /// Zero series on the integer lattice, valid through q^0.
  PuiseuxSeries() : PuiseuxSeries(1, 0, 0, {}) {}

  PuiseuxSeries(int d, long k0, long N, std::vector<S> coeffs) : d_(d), k0_(k0), N_(N), c_(std::move(coeffs)) {
    if (d_ <= 0 || 72 % d_ != 0) throw InvalidValuation("lattice denominator " + std::to_string(d_) + " does not divide 72");
    if (N_ < k0_) throw TruncationError("truncation order below the first stored exponent");
    c_.resize(static_cast<std::size_t>(N_ - k0_ + 1), S(0));
  }

  static PuiseuxSeries zero(long N, int d = 1) { return PuiseuxSeries(d, std::min(0L, N), N, {}); }
  static PuiseuxSeries constant(const S& c, long N) { return monomial(c, 0, N, 1); }

  /// c * q^(num/d), valid through q^(N/d).
  static PuiseuxSeries monomial(const S& c, long num, long N, int d = 1) {
    if (N < num) return PuiseuxSeries(d, N, N, {});
    PuiseuxSeries s(d, num, N, {});
    s.c_[0] = c;
    return s;
  }

  /// Series whose coefficients are given from q^0 on the integer lattice.
  static PuiseuxSeries from_coeffs(std::vector<S> coeffs, long k0 = 0, int d = 1) {
    const long N = k0 + static_cast<long>(coeffs.size()) - 1;
    return PuiseuxSeries(d, k0, N, std::move(coeffs));
  }

  [[nodiscard]] int d() const { return d_; }
  [[nodiscard]] long k0() const { return k0_; }
  [[nodiscard]] long N() const { return N_; }
  [[nodiscard]] const std::vector<S>& coeffs() const { return c_; }

  /// Coefficient of q^(num/d). Zero below k0; throws past N.
  [[nodiscard]] S coeff(long num) const {
    if (num > N_) throw TruncationError("coefficient of q^(" + std::to_string(num) + "/" + std::to_string(d_) + ") is beyond the valid order");
    if (num < k0_) return S(0);
    return c_[static_cast<std::size_t>(num - k0_)];
  }
  S& at(long num) { return c_.at(static_cast<std::size_t>(num - k0_)); }

  /// Coefficient of q^(p/r) for an arbitrary rational exponent.
  [[nodiscard]] S coeff_at(long p, long r = 1) const {
    if ((p * d_) % r != 0) return S(0);
    return coeff(p * d_ / r);
  }
  [[nodiscard]] S operator[](long num) const { return coeff(num); }

  /// First numerator with a nonzero coefficient, or N+1 when none is known.
  [[nodiscard]] long valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (!is_zero(c_[i])) return k0_ + static_cast<long>(i);
    }
    return N_ + 1;
  }
  [[nodiscard]] bool is_known_zero() const { return valuation() > N_; }

  /// Drop terms beyond numerator n (no-op when n >= N).
  [[nodiscard]] PuiseuxSeries truncate(long n) const {
    if (n >= N_) return *this;
    if (n < k0_) return PuiseuxSeries(d_, n, n, {});
    std::vector<S> c(c_.begin(), c_.begin() + (n - k0_ + 1));
    return PuiseuxSeries(d_, k0_, n, std::move(c));
  }

  /// Same series on the lattice d*m.
  [[nodiscard]] PuiseuxSeries refine(int m) const {
    if (m == 1) return *this;
    PuiseuxSeries r(d_ * m, k0_ * m, m * (N_ + 1) - 1, {});
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i * static_cast<std::size_t>(m)] = c_[i];
    return r;
  }

  /// Express on lattice d' (must be a multiple of d).
  [[nodiscard]] PuiseuxSeries on_lattice(int d2) const {
    if (d2 % d_ != 0) throw InvalidValuation("cannot move from lattice " + std::to_string(d_) + " to " + std::to_string(d2));
    return refine(d2 / d_);
  }

  /// Inverse of refine; requires every nonzero exponent on the coarser lattice.
  [[nodiscard]] std::optional<PuiseuxSeries> coarsen(int m) const {
    if (m == 1) return *this;
    if (d_ % m != 0) return std::nullopt;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      const long k = k0_ + static_cast<long>(i);
      if (!is_zero(c_[i]) && floor_mod(k, m) != 0) return std::nullopt;
    }
    const long nk0 = ceil_div(k0_, m);
    const long nN = floor_div(N_ + 1, m) - 1;
    PuiseuxSeries r(d_ / m, std::min(nk0, nN), nN, {});
    for (long k = r.k0_; k <= nN; ++k) {
      if (k * m >= k0_) r.c_[static_cast<std::size_t>(k - r.k0_)] = c_[static_cast<std::size_t>(k * m - k0_)];
    }
    return r;
  }

  /// Coarsest lattice reachable by coarsen() that still holds every known
  /// nonzero coefficient. The truncation order may round down.
  [[nodiscard]] PuiseuxSeries reduced() const {
    PuiseuxSeries cur = *this;
    for (bool moved = true; moved;) {
      moved = false;
      for (int p : {2, 3}) {
        if (cur.d_ % p != 0) continue;
        auto c = cur.coarsen(p);
        if (!c || (c->is_known_zero() && !cur.is_known_zero())) continue;
        cur = std::move(*c);
        moved = true;
      }
    }
    return cur;
  }

  /// Multiply by q^(num/d).
  [[nodiscard]] PuiseuxSeries shift(long num) const {
    PuiseuxSeries r = *this;
    r.k0_ += num;
    r.N_ += num;
    return r;
  }

  PuiseuxSeries& operator+=(const PuiseuxSeries& o) { return *this = add(*this, o, false); }
  PuiseuxSeries& operator-=(const PuiseuxSeries& o) { return *this = add(*this, o, true); }
  PuiseuxSeries& operator*=(const PuiseuxSeries& o) { return *this = *this * o; }
  PuiseuxSeries& operator*=(const S& s) {
    for (auto& x : c_) x *= s;
    return *this;
  }

  friend PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b) { return add(a, b, false); }
  friend PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b) { return add(a, b, true); }
  friend PuiseuxSeries operator-(PuiseuxSeries a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend PuiseuxSeries operator*(PuiseuxSeries a, const S& s) { return a *= s; }
  friend PuiseuxSeries operator*(const S& s, PuiseuxSeries a) { return a *= s; }
  friend PuiseuxSeries operator+(const PuiseuxSeries& a, const S& s) {
    return a + PuiseuxSeries::monomial(s, 0, a.N_, a.d_);
  }
  friend PuiseuxSeries operator-(const PuiseuxSeries& a, const S& s) { return a + (-s); }

  friend PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    const int d = std::lcm(a.d_, b.d_);
    if (a.d_ != d || b.d_ != d) return a.on_lattice(d) * b.on_lattice(d);
    const long va = a.valuation();
    const long vb = b.valuation();
    const long N = std::min(a.N_ + vb, b.N_ + va);
    const long k0 = std::min(va + vb, N);
    PuiseuxSeries r(d, k0, N, {});
    if (va > a.N_ || vb > b.N_) return r;
    const long len = N - (va + vb) + 1;
    if (len <= 0) return r;
    const auto ai = static_cast<std::size_t>(va - a.k0_);
    const auto bi = static_cast<std::size_t>(vb - b.k0_);
    const auto la = std::min<std::size_t>(a.c_.size() - ai, static_cast<std::size_t>(len));
    const auto lb = std::min<std::size_t>(b.c_.size() - bi, static_cast<std::size_t>(len));
    std::vector<S> out = convolve(&a.c_[ai], la, &b.c_[bi], lb, static_cast<std::size_t>(len));
    for (std::size_t i = 0; i < out.size(); ++i) r.c_[static_cast<std::size_t>(va + vb - k0) + i] = std::move(out[i]);
    return r;
  }

  friend PuiseuxSeries operator/(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    const int d = std::lcm(a.d_, b.d_);
    if (a.d_ != d || b.d_ != d) return a.on_lattice(d) / b.on_lattice(d);
    const long vb = b.valuation();
    if (vb > b.N_) throw NonUnitDivisor("divisor has no known nonzero coefficient");
    const long va = a.valuation();
    const long N = std::min(a.N_ - vb, b.N_ - 2 * vb + va);
    const long start = std::min(va - vb, N);
    PuiseuxSeries r(d, start, N, {});
    if (va > a.N_) return r;
    // r_n from b * r = a, indices relative to the valuations
    const S inv = S(1) / b.coeff(vb);
    const long len = N - (va - vb) + 1;
    std::vector<S> out(static_cast<std::size_t>(std::max(len, 0L)), S(0));
    for (long n = 0; n < len; ++n) {
      S acc = a.coeff(va + n);
      for (long j = 1; j <= n; ++j) {
        if (vb + j > b.N_) break;
        const S& bj = b.c_[static_cast<std::size_t>(vb + j - b.k0_)];
        if (!is_zero(bj)) acc -= bj * out[static_cast<std::size_t>(n - j)];
      }
      out[static_cast<std::size_t>(n)] = acc * inv;
    }
    for (long n = 0; n < len; ++n) r.c_[static_cast<std::size_t>(va - vb + n - start)] = std::move(out[static_cast<std::size_t>(n)]);
    return r;
  }

  /// Equal on every exponent below both truncation orders.
  friend bool operator==(const PuiseuxSeries& a, const PuiseuxSeries& b) { return !first_difference(a, b).has_value(); }

  /// First exponent (as p/r reduced) where a and b differ within the common valid range.
  friend std::optional<Rational> first_difference(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    const int d = std::lcm(a.d_, b.d_);
    if (a.d_ != d || b.d_ != d) return first_difference(a.on_lattice(d), b.on_lattice(d));
    const long N = std::min(a.N_, b.N_);
    for (long k = std::min(a.k0_, b.k0_); k <= N; ++k) {
      if (!(a.coeff(k) == b.coeff(k))) return Rational(k, d);
    }
    return std::nullopt;
  }

 private:
  static long floor_div(long a, long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
  static long ceil_div(long a, long b) { return -floor_div(-a, b); }
  static long floor_mod(long a, long b) { return a - b * floor_div(a, b); }

  static PuiseuxSeries add(const PuiseuxSeries& a, const PuiseuxSeries& b, bool negate) {
    const int d = std::lcm(a.d_, b.d_);
    if (a.d_ != d || b.d_ != d) return add(a.on_lattice(d), b.on_lattice(d), negate);
    const long N = std::min(a.N_, b.N_);
    const long k0 = std::min({a.k0_, b.k0_, N});
    PuiseuxSeries r(d, k0, N, {});
    for (long k = k0; k <= N; ++k) {
      S v = k >= a.k0_ ? a.c_[static_cast<std::size_t>(k - a.k0_)] : S(0);
      if (k >= b.k0_) {
        if (negate) v -= b.c_[static_cast<std::size_t>(k - b.k0_)];
        else v += b.c_[static_cast<std::size_t>(k - b.k0_)];
      }
      r.c_[static_cast<std::size_t>(k - k0)] = std::move(v);
    }
    return r;
  }

  /// First `len` coefficients of the product of two dense coefficient runs.
  static std::vector<S> convolve(const S* a, std::size_t la, const S* b, std::size_t lb, std::size_t len) {
    if constexpr (std::is_same_v<S, Rational>) {
      return convolve_rational(a, la, b, lb, len);
    } else {
      std::vector<S> out(len, S(0));
      for (std::size_t i = 0; i < la && i < len; ++i) {
        if (is_zero(a[i])) continue;
        for (std::size_t j = 0; j < lb && i + j < len; ++j) {
          if (!is_zero(b[j])) out[i + j] += a[i] * b[j];
        }
      }
      return out;
    }
  }

  // Clear denominators once per operand, convolve integers, restore.
  static std::vector<Rational> convolve_rational(const Rational* a, std::size_t la, const Rational* b, std::size_t lb,
                                                 std::size_t len) {
    auto scale = [](const Rational* x, std::size_t n, BigInt& den) {
      den = 1;
      for (std::size_t i = 0; i < n; ++i) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x[i].get().get_den_mpz_t());
      std::vector<BigInt> ints(n);
      for (std::size_t i = 0; i < n; ++i) {
        mpz_divexact(ints[i].get_mpz_t(), den.get_mpz_t(), x[i].get().get_den_mpz_t());
        ints[i] *= x[i].get().get_num();
      }
      return ints;
    };
    BigInt da, db;
    const std::vector<BigInt> ia = scale(a, la, da);
    const std::vector<BigInt> ib = scale(b, lb, db);
    std::vector<BigInt> acc(len);
    for (std::size_t i = 0; i < la && i < len; ++i) {
      if (sgn(ia[i]) == 0) continue;
      for (std::size_t j = 0; j < lb && i + j < len; ++j) {
        mpz_addmul(acc[i + j].get_mpz_t(), ia[i].get_mpz_t(), ib[j].get_mpz_t());
      }
    }
    const BigInt den = da * db;
    std::vector<Rational> out;
    out.reserve(len);
    for (auto& v : acc) out.emplace_back(v, den);
    return out;
  }

  int d_;
  long k0_;
  long N_;
  std::vector<S> c_;
};

using QSeries = PuiseuxSeries<Rational>;

/// D = q d/dq: q^(k/d) -> (k/d) q^(k/d).
template <class S>
PuiseuxSeries<S> derive(const PuiseuxSeries<S>& f) {
  std::vector<S> c(f.coeffs());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const long k = f.k0() + static_cast<long>(i);
    if (!is_zero(c[i])) c[i] *= S(Rational(k, f.d()));
  }
  return PuiseuxSeries<S>(f.d(), f.k0(), f.N(), std::move(c));
}

template <class S>
PuiseuxSeries<S> exp(const PuiseuxSeries<S>& f) {
  const long v = f.valuation();
  if (v <= 0 && v <= f.N()) throw InvalidValuation("exp needs a series without constant or negative terms");
  const long N = f.N();
  if (N < 0) return PuiseuxSeries<S>(f.d(), N, N, {});
  // n e_n = sum_{k=1}^{n} k f_k e_{n-k}
  std::vector<S> e(static_cast<std::size_t>(N + 1), S(0));
  e[0] = S(1);
  for (long n = 1; n <= N; ++n) {
    S acc(0);
    for (long k = std::max(1L, v); k <= n; ++k) {
      const S fk = f.coeff(k);
      if (!is_zero(fk)) acc += S(k) * fk * e[static_cast<std::size_t>(n - k)];
    }
    e[static_cast<std::size_t>(n)] = acc * S(Rational(1, n));
  }
  return PuiseuxSeries<S>(f.d(), 0, N, std::move(e));
}

template <class S>
PuiseuxSeries<S> log(const PuiseuxSeries<S>& g) {
  const long N = g.N();
  if (g.valuation() != 0 || !(g.coeff(0) == S(1))) throw InvalidValuation("log needs constant term 1 and no negative terms");
  // n l_n = n g_n - sum_{k=1}^{n-1} k l_k g_{n-k}
  std::vector<S> l(static_cast<std::size_t>(N + 1), S(0));
  for (long n = 1; n <= N; ++n) {
    S acc = S(n) * g.coeff(n);
    for (long k = 1; k < n; ++k) {
      const S gk = g.coeff(n - k);
      if (!is_zero(gk) && !is_zero(l[static_cast<std::size_t>(k)])) acc -= S(k) * l[static_cast<std::size_t>(k)] * gk;
    }
    l[static_cast<std::size_t>(n)] = acc * S(Rational(1, n));
  }
  return PuiseuxSeries<S>(g.d(), 0, N, std::move(l));
}

/// Reciprocal 1/f.
template <class S>
PuiseuxSeries<S> inverse(const PuiseuxSeries<S>& f) {
  const long v = f.valuation();
  if (v > f.N()) throw NonUnitDivisor("reciprocal of a series with no known nonzero coefficient");
  return PuiseuxSeries<S>::monomial(S(1), 0, f.N() - v, f.d()) / f;
}

/// Integer power, negative exponents through the reciprocal.
template <class S>
PuiseuxSeries<S> pow(const PuiseuxSeries<S>& f, long n) {
  if (n == 0) return PuiseuxSeries<S>::monomial(S(1), 0, std::max(0L, f.N()), f.d());
  if (n < 0) return inverse(pow(f, -n));
  std::optional<PuiseuxSeries<S>> result;
  PuiseuxSeries<S> base = f;
  while (n > 0) {
    if (n & 1) result = result ? *result * base : base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return *result;
}


/// Extend the declared validity of s to T. Only for internal use where the
/// caller has proved the extra coefficients are zero.
template <class S>
PuiseuxSeries<S> pad_to(const PuiseuxSeries<S>& s, long T) {
  if (T <= s.N()) return s.truncate(T);
  std::vector<S> c(s.coeffs());
  c.resize(static_cast<std::size_t>(T - s.k0() + 1), S(0));
  return PuiseuxSeries<S>(s.d(), s.k0(), T, std::move(c));
}

/// f(g) for f in the variable tau (integer lattice, no negative powers) and
/// g with positive valuation on the integer lattice.
template <class S>
PuiseuxSeries<S> compose(const PuiseuxSeries<S>& f, const PuiseuxSeries<S>& g) {
  if (f.d() != 1 || g.d() != 1) throw InvalidValuation("composition works on the integer lattice");
  if (f.valuation() < 0) throw InvalidValuation("outer series has negative powers");
  const long v = g.valuation();
  if (v < 1) throw InvalidValuation("inner series must have positive valuation");
  // error from truncating f, then from truncating g (first order term f'(g)*O(q^(N_g+1)))
  long T = v * (f.N() + 1) - 1;
  for (long k = 1; k <= f.N(); ++k) {
    if (!is_zero(f.coeff(k))) {
      T = std::min(T, g.N() + (k - 1) * v);
      break;
    }
  }
  const PuiseuxSeries<S> G = pad_to(g, T);
  PuiseuxSeries<S> acc = PuiseuxSeries<S>::constant(f.coeff(f.N()), T);
  for (long k = f.N() - 1; k >= 0; --k) {
    acc = (acc * G).truncate(T);
    acc = acc + f.coeff(k);
  }
  return acc;
}

/// Compositional inverse h with f(h(q)) = q, by Lagrange inversion.
template <class S>
PuiseuxSeries<S> revert(const PuiseuxSeries<S>& f) {
  if (f.d() != 1) throw NotRevertible("reversion works on the integer lattice");
  if (f.valuation() < 1) throw NotRevertible("series has a constant or negative term");
  if (f.N() < 1 || is_zero(f.coeff(1))) throw NotRevertible("linear coefficient is zero");
  const long N = f.N();
  // w = tau / f, valid through tau^(N-1)
  const PuiseuxSeries<S> w = inverse(f.shift(-1));
  std::vector<S> h(static_cast<std::size_t>(N), S(0));
  PuiseuxSeries<S> wn = PuiseuxSeries<S>::constant(S(1), N - 1);
  for (long n = 1; n <= N; ++n) {
    wn = wn * w;
    h[static_cast<std::size_t>(n - 1)] = wn.coeff(n - 1) * S(Rational(1, n));
  }
  return PuiseuxSeries<S>(1, 1, N, std::move(h));
}

/// n-th root with leading coefficient an n-th power in the field.
template <class S>
PuiseuxSeries<S> nth_root(const PuiseuxSeries<S>& f, unsigned n) {
  if (n == 0) throw RootObstruction("zeroth root");
  if (n == 1) return f;
  const long v = f.valuation();
  if (v > f.N()) throw RootObstruction("series has no known nonzero coefficient");
  S lead_root;
  if (!exact_root(f.coeff(v), n, lead_root)) throw RootObstruction("leading coefficient " + to_string(f.coeff(v)) + " is not an n-th power");
  const long R = f.N() - v;
  // unit part u = f / (c q^v), root by Miller's recurrence with alpha = 1/n
  const S inv_lead = S(1) / f.coeff(v);
  const Rational alpha(1, static_cast<long>(n));
  std::vector<S> u(static_cast<std::size_t>(R + 1));
  for (long k = 0; k <= R; ++k) u[static_cast<std::size_t>(k)] = f.coeff(v + k) * inv_lead;
  std::vector<S> r(static_cast<std::size_t>(R + 1), S(0));
  r[0] = S(1);
  for (long m = 1; m <= R; ++m) {
    S acc(0);
    for (long k = 1; k <= m; ++k) {
      const S& uk = u[static_cast<std::size_t>(k)];
      if (is_zero(uk)) continue;
      acc += S((alpha + Rational(1)) * Rational(k) - Rational(m)) * uk * r[static_cast<std::size_t>(m - k)];
    }
    r[static_cast<std::size_t>(m)] = acc * S(Rational(1, m));
  }
  for (auto& x : r) x *= lead_root;
  PuiseuxSeries<S> unit(f.d(), 0, R, std::move(r));
  const long nl = static_cast<long>(n);
  if (v % nl == 0) return unit.shift(v / nl);
  if (72 % (f.d() * static_cast<int>(n)) != 0) throw RootObstruction("root needs a lattice finer than 1/72");
  return unit.refine(static_cast<int>(n)).shift(v);
}

/// D(f)/f, with the leading monomial factored out first so that the
/// result lives on the lattice of the unit part.
template <class S>
PuiseuxSeries<S> log_derivative(const PuiseuxSeries<S>& f) {
  const long v = f.valuation();
  if (v > f.N()) throw NonUnitDivisor("logarithmic derivative of a zero series");
  const PuiseuxSeries<S> unit = f.shift(-v) * S(S(1) / f.coeff(v));
  PuiseuxSeries<S> r = derive(unit) / unit;
  r = r + S(Rational(v, f.d()));
  return r.reduced();
}

/// Series in q^(1/d) with q replaced by q^m (lattice kept).
template <class S>
PuiseuxSeries<S> dilate(const PuiseuxSeries<S>& f, long m) {
  if (m < 1) throw InvalidValuation("dilation factor must be positive");
  const long N = m * (f.N() + 1) - 1;
  PuiseuxSeries<S> r(f.d(), m * f.k0(), N, {});
  for (long k = f.k0(); k <= f.N(); ++k) r.at(m * k) = f.coeff(k);
  return r;
}

}  // namespace qmf
