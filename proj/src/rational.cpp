#include "qmf/rational.hpp"

#include <cctype>
#include <ostream>

#include "qmf/errors.hpp"

namespace qmf {

namespace {

BigInt parse_integer(std::string_view text) {
  if (text.empty()) throw ParseError("empty integer");
  std::size_t i = 0;
  if (text[0] == '+' || text[0] == '-') i = 1;
  if (i == text.size()) throw ParseError("sign without digits");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw ParseError("bad integer '" + std::string(text) + "'");
    }
  }
  std::string s(text[0] == '+' ? text.substr(1) : text);
  return BigInt(s, 10);
}

}  // namespace

Rational::Rational(long n, long d) : v_(n, d) {
  if (d == 0) throw DivisionByZero("rational with zero denominator");
  v_.canonicalize();
}

Rational::Rational(const BigInt& n) : v_(n) {}

Rational::Rational(const BigInt& n, const BigInt& d) : v_(n, d) {
  if (sgn(d) == 0) throw DivisionByZero("rational with zero denominator");
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  return Rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  Rational r;
  mpq_inv(r.v_.get_mpq_t(), v_.get_mpq_t());
  return r;
}

Rational Rational::abs() const {
  Rational r;
  r.v_ = ::abs(v_);
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero("division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rational::str() const { return v_.get_str(10); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) return pow(base.inverse(), -exponent);
  BigInt n, d;
  mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(n, d);
}

bool exact_root(const Rational& value, unsigned n, Rational& root) {
  if (n == 0) return false;
  if (value.sign() < 0 && n % 2 == 0) return false;
  BigInt num = ::abs(value.num());
  BigInt rn, rd;
  if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), n) == 0) return false;
  if (mpz_root(rd.get_mpz_t(), value.den().get_mpz_t(), n) == 0) return false;
  if (value.sign() < 0) rn = -rn;
  root = Rational(rn, rd);
  return true;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Rational pochhammer(const Rational& a, unsigned long n) {
  Rational r(1);
  for (unsigned long i = 0; i < n; ++i) r *= a + Rational(static_cast<long>(i));
  return r;
}

}  // namespace qmf
