#include "qmf/bigfloat.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <vector>

#include "qmf/errors.hpp"

namespace qmf {

namespace {

mpfr_prec_t wider(const BigFloat& a, const BigFloat& b) { return std::max(a.prec(), b.prec()); }

}  // namespace

BigFloat::BigFloat(mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(double v, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_d(v_, v, MPFR_RNDN);
}

BigFloat::BigFloat(long v, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_si(v_, v, MPFR_RNDN);
}

BigFloat::BigFloat(const Rational& v, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_q(v_, v.get().get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(std::string_view text, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  const std::string s(text);
  char* end = nullptr;
  mpfr_strtofr(v_, s.c_str(), &end, 0, MPFR_RNDN);
  if (end == s.c_str() || *end != '\0') {
    mpfr_clear(v_);
    throw ParseError("bad float '" + s + "'");
  }
}

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(v_, o.prec());
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
  mpfr_init2(v_, o.prec());
  mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.prec());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

long BigFloat::exponent() const {
  if (mpfr_zero_p(v_)) return mpfr_get_emin();
  return mpfr_get_exp(v_);
}

std::string BigFloat::str(int digits) const {
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, v_);
  return buf.data();
}

std::string BigFloat::hex() const {
  char* out = nullptr;
  mpfr_asprintf(&out, "%Ra", v_);
  std::string s(out);
  mpfr_free_str(out);
  return s;
}

BigFloat& BigFloat::operator+=(const BigFloat& o) { return *this = *this + o; }
BigFloat& BigFloat::operator-=(const BigFloat& o) { return *this = *this - o; }
BigFloat& BigFloat::operator*=(const BigFloat& o) { return *this = *this * o; }
BigFloat& BigFloat::operator/=(const BigFloat& o) { return *this = *this / o; }

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r(wider(a, b));
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r(wider(a, b));
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r(wider(a, b));
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  if (b.is_zero()) throw DivisionByZero("float division by zero");
  BigFloat r(wider(a, b));
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& a) {
  BigFloat r(a.prec());
  mpfr_neg(r.v_, a.v_, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
  if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.v_, b.v_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::ostream& operator<<(std::ostream& os, const BigFloat& x) { return os << x.str(); }

#define QMF_UNARY(name, fn)                \
  BigFloat name(const BigFloat& x) {       \
    BigFloat r(x.prec());                  \
    fn(r.get(), x.get(), MPFR_RNDN);       \
    return r;                              \
  }
QMF_UNARY(abs, mpfr_abs)
QMF_UNARY(sqrt, mpfr_sqrt)
QMF_UNARY(log, mpfr_log)
QMF_UNARY(exp, mpfr_exp)
QMF_UNARY(sin, mpfr_sin)
QMF_UNARY(cos, mpfr_cos)
#undef QMF_UNARY

BigFloat atan2(const BigFloat& y, const BigFloat& x) {
  BigFloat r(wider(x, y));
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat pow(const BigFloat& x, long n) {
  BigFloat r(x.prec());
  mpfr_pow_si(r.get(), x.get(), n, MPFR_RNDN);
  return r;
}

BigFloat pi(mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

BigFloat ldexp_one(long e, mpfr_prec_t prec) {
  BigFloat r(1L, prec);
  mpfr_mul_2si(r.get(), r.get(), e, MPFR_RNDN);
  return r;
}

BigComplex::BigComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {
  // Both parts share one precision.
  const mpfr_prec_t p = prec();
  if (re_.prec() != p) re_ = re_ + BigFloat(p);
  if (im_.prec() != p) im_ = im_ + BigFloat(p);
}

BigComplex BigComplex::parse_hex(std::string_view text, mpfr_prec_t prec) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) throw ParseError("complex value needs 're,im'");
  return {BigFloat(text.substr(0, comma), prec), BigFloat(text.substr(comma + 1), prec)};
}

std::string BigComplex::str(int digits) const {
  std::string s = re_.str(digits);
  s += im_.sign() < 0 ? " - " : " + ";
  s += abs(im_).str(digits) + "*i";
  return s;
}

BigComplex& BigComplex::operator+=(const BigComplex& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& o) {
  BigFloat re = re_ * o.re_ - im_ * o.im_;
  BigFloat im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& o) {
  const BigFloat d = o.norm2();
  if (d.is_zero()) throw DivisionByZero("complex division by zero");
  BigFloat re = (re_ * o.re_ + im_ * o.im_) / d;
  BigFloat im = (im_ * o.re_ - re_ * o.im_) / d;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

BigFloat abs(const BigComplex& z) {
  BigFloat r(z.prec());
  mpfr_hypot(r.get(), z.real().get(), z.imag().get(), MPFR_RNDN);
  return r;
}

BigFloat arg(const BigComplex& z) { return atan2(z.imag(), z.real()); }

BigComplex log(const BigComplex& z) { return {log(abs(z)), arg(z)}; }

BigComplex exp(const BigComplex& z) {
  const BigFloat m = exp(z.real());
  return {m * cos(z.imag()), m * sin(z.imag())};
}

BigComplex sqrt(const BigComplex& z) {
  // principal root: sqrt((|z|+re)/2) + i*sign(im)*sqrt((|z|-re)/2)
  const BigFloat r = abs(z);
  const BigFloat two(2L, z.prec());
  BigFloat re = sqrt((r + z.real()) / two);
  BigFloat im = sqrt((r - z.real()) / two);
  if (z.imag().sign() < 0) im = -im;
  return {re, im};
}

BigComplex imag_unit(mpfr_prec_t prec) { return {BigFloat(prec), BigFloat(1L, prec)}; }

BigComplex pi_value(mpfr_prec_t prec) {
  if (prec < 64) throw OutOfDomain("pi_value needs at least 64 bits");
  return BigComplex(pi(prec));
}

}  // namespace qmf
