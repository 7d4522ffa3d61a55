#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qmf/polynomial.hpp"

namespace qmf {

/// Denominator catalog: Delta = 27 t3^2 - t2^3 and the pairwise differences.
enum Factor : int { kDelta = 0, kT1T2 = 1, kT2T3 = 2, kT1T3 = 3 };
inline constexpr int kNumFactors = 4;
inline constexpr std::array<const char*, kNumFactors> kFactorNames = {"Δ", "(t1-t2)", "(t2-t3)", "(t1-t3)"};

using FactorExponents = std::array<int, kNumFactors>;

template <class S>
const Polynomial<S>& catalog_factor(int i) {
  using P = Polynomial<S>;
  static const std::array<P, kNumFactors> f = {
      P(S(27)) * P::var(T3, 2) - P::var(T2, 3),
      P::var(T1) - P::var(T2),
      P::var(T2) - P::var(T3),
      P::var(T1) - P::var(T3),
  };
  return f[static_cast<std::size_t>(i)];
}

/// numerator / prod catalog_factor(i)^e_i. Equality is by cross-multiplication.
template <class S>
class ParamFraction {
 public:
  using P = Polynomial<S>;

  ParamFraction() = default;
  ParamFraction(P num, FactorExponents den = {}) : num_(std::move(num)), den_(den) {  // NOLINT
    if (num_.is_zero()) den_ = {};
  }
  ParamFraction(const S& c) : ParamFraction(P(c)) {}  // NOLINT(google-explicit-constructor)
  ParamFraction(long c) : ParamFraction(P(c)) {}     // NOLINT(google-explicit-constructor)
  ParamFraction(int c) : ParamFraction(P(c)) {}      // NOLINT(google-explicit-constructor)

  /// 1 / factor^k
  static ParamFraction reciprocal(Factor f, int k = 1) {
    FactorExponents e{};
    e[f] = k;
    return ParamFraction(P(1), e);
  }

  [[nodiscard]] const P& num() const { return num_; }
  [[nodiscard]] const FactorExponents& den() const { return den_; }
  [[nodiscard]] bool is_zero() const { return num_.is_zero(); }
  [[nodiscard]] bool is_polynomial() const { return den_ == FactorExponents{}; }

  [[nodiscard]] P den_poly() const {
    P d(1);
    for (int i = 0; i < kNumFactors; ++i) d *= pow(catalog_factor<S>(i), den_[static_cast<std::size_t>(i)]);
    return d;
  }

  /// Cancel catalog factors that divide the numerator.
  [[nodiscard]] ParamFraction normalized() const {
    ParamFraction r = *this;
    for (int i = 0; i < kNumFactors; ++i) {
      while (r.den_[static_cast<std::size_t>(i)] > 0) {
        auto q = r.num_.divide_exact(catalog_factor<S>(i));
        if (!q) break;
        r.num_ = std::move(*q);
        --r.den_[static_cast<std::size_t>(i)];
      }
    }
    if (r.num_.is_zero()) r.den_ = {};
    return r;
  }

  /// Polynomial value when the denominator cancels completely.
  [[nodiscard]] std::optional<P> as_polynomial() const {
    const ParamFraction n = normalized();
    if (!n.is_polynomial()) return std::nullopt;
    return n.num_;
  }

  /// Numerator over the given (pointwise larger) denominator.
  [[nodiscard]] P numerator_over(const FactorExponents& e) const {
    P n = num_;
    for (int i = 0; i < kNumFactors; ++i) {
      const int extra = e[static_cast<std::size_t>(i)] - den_[static_cast<std::size_t>(i)];
      if (extra < 0) throw Error("numerator_over: target denominator too small");
      n *= pow(catalog_factor<S>(i), extra);
    }
    return n;
  }

  [[nodiscard]] ParamFraction diff(Var v) const {
    // d(N / prod f^e) = dN / prod f^e - sum_i e_i N df_i / (f_i prod f^e)
    ParamFraction r(num_.diff(v), den_);
    for (int i = 0; i < kNumFactors; ++i) {
      const int e = den_[static_cast<std::size_t>(i)];
      if (e == 0) continue;
      FactorExponents d = den_;
      d[static_cast<std::size_t>(i)] += 1;
      r += ParamFraction(num_ * catalog_factor<S>(i).diff(v) * S(-e), d);
    }
    return r;
  }

  [[nodiscard]] S evaluate(const std::map<Var, S>& point) const {
    const S d = den_poly().evaluate(point);
    if (qmf::is_zero(d)) throw DivisionByZero("fraction evaluated on its polar locus");
    return num_.evaluate(point) / d;
  }

  ParamFraction& operator+=(const ParamFraction& o) { return *this = combine(*this, o, false); }
  ParamFraction& operator-=(const ParamFraction& o) { return *this = combine(*this, o, true); }
  ParamFraction& operator*=(const ParamFraction& o) {
    num_ *= o.num_;
    for (int i = 0; i < kNumFactors; ++i) den_[static_cast<std::size_t>(i)] += o.den_[static_cast<std::size_t>(i)];
    if (num_.is_zero()) den_ = {};
    return *this;
  }

  friend ParamFraction operator+(ParamFraction a, const ParamFraction& b) { return a += b; }
  friend ParamFraction operator-(ParamFraction a, const ParamFraction& b) { return a -= b; }
  friend ParamFraction operator*(ParamFraction a, const ParamFraction& b) { return a *= b; }
  friend ParamFraction operator-(const ParamFraction& a) { return ParamFraction(-a.num_, a.den_); }
  /// Division by a scalar.
  friend ParamFraction operator/(const ParamFraction& a, const S& s) { return ParamFraction(a.num_ * (S(1) / s), a.den_); }

  friend bool operator==(const ParamFraction& a, const ParamFraction& b) {
    const FactorExponents e = join(a.den_, b.den_);
    return a.numerator_over(e) == b.numerator_over(e);
  }

  /// "num / Δ^2*(t1-t2)"
  [[nodiscard]] std::string str() const {
    if (is_polynomial()) return num_.str();
    std::string n = num_.str();
    if (num_.size() > 1) n = "(" + n + ")";
    std::string d;
    for (int i = 0; i < kNumFactors; ++i) {
      const int e = den_[static_cast<std::size_t>(i)];
      if (e == 0) continue;
      if (!d.empty()) d += "*";
      d += kFactorNames[static_cast<std::size_t>(i)];
      if (e > 1) d += "^" + std::to_string(e);
    }
    return n + " / " + d;
  }

  static FactorExponents join(const FactorExponents& a, const FactorExponents& b) {
    FactorExponents e;
    for (int i = 0; i < kNumFactors; ++i) e[static_cast<std::size_t>(i)] = std::max(a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(i)]);
    return e;
  }

 private:
  static ParamFraction combine(const ParamFraction& a, const ParamFraction& b, bool negate) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return negate ? -b : b;
    const FactorExponents e = join(a.den_, b.den_);
    P n = a.numerator_over(e);
    if (negate) n -= b.numerator_over(e);
    else n += b.numerator_over(e);
    return ParamFraction(std::move(n), e);
  }

  P num_;
  FactorExponents den_{};
};

using Fraction = ParamFraction<Rational>;

/// a dt1 + b dt2 + c dt3
template <class S>
struct OneForm {
  std::array<ParamFraction<S>, 3> c;

  static OneForm dt(int i) {
    OneForm w;
    w.c[static_cast<std::size_t>(i)] = ParamFraction<S>(1);
    return w;
  }

  OneForm& operator+=(const OneForm& o) {
    for (int i = 0; i < 3; ++i) c[static_cast<std::size_t>(i)] += o.c[static_cast<std::size_t>(i)];
    return *this;
  }
  OneForm& operator-=(const OneForm& o) {
    for (int i = 0; i < 3; ++i) c[static_cast<std::size_t>(i)] -= o.c[static_cast<std::size_t>(i)];
    return *this;
  }
  friend OneForm operator+(OneForm a, const OneForm& b) { return a += b; }
  friend OneForm operator-(OneForm a, const OneForm& b) { return a -= b; }
  friend OneForm operator-(OneForm a) {
    for (auto& x : a.c) x = -x;
    return a;
  }
  friend OneForm operator*(const ParamFraction<S>& f, OneForm a) {
    for (auto& x : a.c) x = f * x;
    return a;
  }
  friend bool operator==(const OneForm& a, const OneForm& b) { return a.c == b.c; }

  [[nodiscard]] bool is_zero() const { return c[0].is_zero() && c[1].is_zero() && c[2].is_zero(); }

  [[nodiscard]] OneForm normalized() const {
    OneForm r;
    for (int i = 0; i < 3; ++i) r.c[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i)].normalized();
    return r;
  }

  [[nodiscard]] std::string str() const {
    std::string s;
    for (int i = 0; i < 3; ++i) {
      if (c[static_cast<std::size_t>(i)].is_zero()) continue;
      if (!s.empty()) s += " + ";
      s += "(" + c[static_cast<std::size_t>(i)].str() + ")*dt" + std::to_string(i + 1);
    }
    return s.empty() ? "0" : s;
  }
};

/// sum R_i d/dt_i
template <class S>
using VectorField = std::vector<Polynomial<S>>;

template <class S>
OneForm<S> total_differential(const ParamFraction<S>& f) {
  OneForm<S> w;
  for (int i = 0; i < 3; ++i) w.c[static_cast<std::size_t>(i)] = f.diff(static_cast<Var>(i));
  return w;
}

template <class S>
ParamFraction<S> pair(const OneForm<S>& w, const VectorField<S>& v) {
  ParamFraction<S> r;
  for (std::size_t i = 0; i < 3 && i < v.size(); ++i) r += w.c[i] * ParamFraction<S>(v[i]);
  return r;
}

/// Derivation along v of a polynomial: sum dp/dt_i * v_i.
template <class S>
Polynomial<S> apply_field(const VectorField<S>& v, const Polynomial<S>& p) {
  Polynomial<S> r;
  for (std::size_t i = 0; i < v.size() && i < 4; ++i) r += p.diff(static_cast<Var>(i)) * v[i];
  return r;
}

}  // namespace qmf
