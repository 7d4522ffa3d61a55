#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include <mpfr.h>

#include "qmf/rational.hpp"

namespace qmf {

/// MPFR float that owns its precision. Binary operations round to the larger
/// of the two operand precisions, so a result is never less precise than its
/// most precise input.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = 128);
  BigFloat(double v, mpfr_prec_t prec);
  BigFloat(long v, mpfr_prec_t prec);
  BigFloat(const Rational& v, mpfr_prec_t prec);
  /// Decimal or hexfloat ("0x1.8p+1") text, base detected by prefix.
  BigFloat(std::string_view text, mpfr_prec_t prec);

  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  [[nodiscard]] mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  [[nodiscard]] mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  [[nodiscard]] double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  [[nodiscard]] bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  [[nodiscard]] int sign() const { return mpfr_sgn(v_); }
  /// Binary exponent e with 2^(e-1) <= |x| < 2^e; very negative for zero.
  [[nodiscard]] long exponent() const;

  /// Scientific notation with the given number of significant digits.
  [[nodiscard]] std::string str(int digits = 20) const;
  /// Bit-exact hexfloat, e.g. "0x1.921fb54442d18p+1".
  [[nodiscard]] std::string hex() const;

  BigFloat& operator+=(const BigFloat& o);
  BigFloat& operator-=(const BigFloat& o);
  BigFloat& operator*=(const BigFloat& o);
  BigFloat& operator/=(const BigFloat& o);

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a);

  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b);

  friend std::ostream& operator<<(std::ostream& os, const BigFloat& x);

 private:
  mpfr_t v_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat sin(const BigFloat& x);
BigFloat cos(const BigFloat& x);
BigFloat atan2(const BigFloat& y, const BigFloat& x);
BigFloat pow(const BigFloat& x, long n);
BigFloat pi(mpfr_prec_t prec);
/// 2^e at the given precision.
BigFloat ldexp_one(long e, mpfr_prec_t prec);

class BigComplex {
 public:
  explicit BigComplex(mpfr_prec_t prec = 128) : re_(prec), im_(prec) {}
  BigComplex(BigFloat re, BigFloat im);
  BigComplex(const BigFloat& re) : BigComplex(re, BigFloat(re.prec())) {}  // NOLINT
  BigComplex(const Rational& re, const Rational& im, mpfr_prec_t prec)
      : re_(re, prec), im_(im, prec) {}

  /// Parses the "re,im" hexfloat pair written by hex().
  static BigComplex parse_hex(std::string_view text, mpfr_prec_t prec);

  [[nodiscard]] const BigFloat& real() const { return re_; }
  [[nodiscard]] const BigFloat& imag() const { return im_; }
  [[nodiscard]] mpfr_prec_t prec() const { return re_.prec() > im_.prec() ? re_.prec() : im_.prec(); }

  [[nodiscard]] BigComplex conj() const { return {re_, -im_}; }
  [[nodiscard]] BigFloat norm2() const { return re_ * re_ + im_ * im_; }
  [[nodiscard]] std::string str(int digits = 20) const;
  [[nodiscard]] std::string hex() const { return re_.hex() + "," + im_.hex(); }

  BigComplex& operator+=(const BigComplex& o);
  BigComplex& operator-=(const BigComplex& o);
  BigComplex& operator*=(const BigComplex& o);
  BigComplex& operator/=(const BigComplex& o);

  friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
  friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
  friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
  friend BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }
  friend BigComplex operator-(const BigComplex& a) { return {-a.re_, -a.im_}; }

  friend bool operator==(const BigComplex& a, const BigComplex& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

 private:
  BigFloat re_;
  BigFloat im_;
};

BigFloat abs(const BigComplex& z);
BigFloat arg(const BigComplex& z);
/// Principal branch.
BigComplex log(const BigComplex& z);
BigComplex exp(const BigComplex& z);
BigComplex sqrt(const BigComplex& z);
/// i at the given precision.
BigComplex imag_unit(mpfr_prec_t prec);

/// pi as a complex value with zero imaginary part.
BigComplex pi_value(mpfr_prec_t prec);

}  // namespace qmf
