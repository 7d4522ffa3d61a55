#pragma once

#include <complex>
#include <iosfwd>
#include <string>

#include "qmf/rational.hpp"

namespace qmf {

/// Element a + b*zeta of Q(zeta_n) for n in {1, 3, 4}. Conductor 1 means b = 0
/// and the value is a plain rational; it promotes silently when mixed with 3 or 4.
class Cyclo {
 public:
  Cyclo() = default;
  Cyclo(long v) : a_(v) {}             // NOLINT(google-explicit-constructor)
  Cyclo(int v) : a_(v) {}              // NOLINT(google-explicit-constructor)
  Cyclo(const Rational& v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  Cyclo(int conductor, Rational a, Rational b);

  /// zeta_n itself.
  static Cyclo zeta(int conductor);

  [[nodiscard]] int conductor() const { return n_; }
  [[nodiscard]] const Rational& a() const { return a_; }
  [[nodiscard]] const Rational& b() const { return b_; }

  [[nodiscard]] bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  [[nodiscard]] bool is_rational() const { return b_.is_zero(); }

  [[nodiscard]] Cyclo inverse() const;
  [[nodiscard]] Cyclo conj() const;
  /// Field norm down to Q.
  [[nodiscard]] Rational norm() const;

  [[nodiscard]] std::complex<double> embed() const;
  [[nodiscard]] std::string str() const;

  Cyclo& operator+=(const Cyclo& o);
  Cyclo& operator-=(const Cyclo& o);
  Cyclo& operator*=(const Cyclo& o);
  Cyclo& operator/=(const Cyclo& o) { return *this *= o.inverse(); }

  friend Cyclo operator+(Cyclo x, const Cyclo& y) { return x += y; }
  friend Cyclo operator-(Cyclo x, const Cyclo& y) { return x -= y; }
  friend Cyclo operator*(Cyclo x, const Cyclo& y) { return x *= y; }
  friend Cyclo operator/(Cyclo x, const Cyclo& y) { return x /= y; }
  friend Cyclo operator-(const Cyclo& x) { return Cyclo(x.n_, -x.a_, -x.b_); }

  // Equality ignores the conductor tag of rational values.
  friend bool operator==(const Cyclo& x, const Cyclo& y);

  friend std::ostream& operator<<(std::ostream& os, const Cyclo& c);

 private:
  int n_ = 1;
  Rational a_;
  Rational b_;
};

/// Throws ConductorMismatch when c has a nonzero zeta part.
Rational to_rational(const Cyclo& c);

}  // namespace qmf
