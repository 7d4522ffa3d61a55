#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qmf {

using BigInt = mpz_class;

/// Exact rational number in canonical form (coprime parts, positive
/// denominator). Thin value wrapper over mpq_class so that GMP expression
/// templates never leak into generic code.
class Rational {
 public:
  Rational() = default;
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(int n) : v_(n) {}   // NOLINT(google-explicit-constructor)
  Rational(long n, long d);
  Rational(const BigInt& n);  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& n, const BigInt& d);
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  /// Parses "num/den" or "num" (optional sign, decimal digits).
  static Rational parse(std::string_view text);

  [[nodiscard]] BigInt num() const { return v_.get_num(); }
  [[nodiscard]] BigInt den() const { return v_.get_den(); }
  [[nodiscard]] const mpq_class& get() const { return v_; }

  [[nodiscard]] bool is_zero() const { return sgn(v_) == 0; }
  [[nodiscard]] bool is_one() const { return v_ == 1; }
  [[nodiscard]] bool is_integer() const { return v_.get_den() == 1; }
  [[nodiscard]] int sign() const { return sgn(v_); }

  [[nodiscard]] Rational inverse() const;
  [[nodiscard]] Rational abs() const;
  [[nodiscard]] double to_double() const { return v_.get_d(); }

  /// Canonical decimal form "num/den", or "num" when integral.
  [[nodiscard]] std::string str() const;

  Rational& operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
  }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational r;
    r.v_ = -a.v_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class v_;
};

/// Integer power with a possibly negative exponent.
Rational pow(const Rational& base, long exponent);

/// Exact n-th root when one exists in Q.
bool exact_root(const Rational& value, unsigned n, Rational& root);

BigInt binomial(unsigned long n, unsigned long k);
BigInt factorial(unsigned long n);

/// Pochhammer symbol (a)_n = a(a+1)...(a+n-1).
Rational pochhammer(const Rational& a, unsigned long n);

}  // namespace qmf
