#include "qmf/cyclo.hpp"

#include <cmath>
#include <ostream>

#include "qmf/errors.hpp"

namespace qmf {

namespace {

int joint_conductor(int m, int n) {
  if (m == n || n == 1) return m;
  if (m == 1) return n;
  throw ConductorMismatch("cannot mix zeta_" + std::to_string(m) + " and zeta_" + std::to_string(n));
}

}  // namespace

Cyclo::Cyclo(int conductor, Rational a, Rational b) : n_(conductor), a_(std::move(a)), b_(std::move(b)) {
  if (n_ != 1 && n_ != 3 && n_ != 4) throw ConductorMismatch("unsupported conductor " + std::to_string(n_));
  if (n_ == 1 && !b_.is_zero()) throw ConductorMismatch("conductor 1 has no zeta coordinate");
}

Cyclo Cyclo::zeta(int conductor) {
  if (conductor == 1) return Cyclo(1);
  return Cyclo(conductor, Rational(0), Rational(1));
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
  n_ = joint_conductor(n_, o.n_);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) {
  n_ = joint_conductor(n_, o.n_);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

Cyclo& Cyclo::operator*=(const Cyclo& o) {
  n_ = joint_conductor(n_, o.n_);
  if (b_.is_zero()) {
    b_ = a_ * o.b_;
    a_ *= o.a_;
    return *this;
  }
  if (o.b_.is_zero()) {
    a_ *= o.a_;
    b_ *= o.a_;
    return *this;
  }
  const Rational ac = a_ * o.a_;
  const Rational bd = b_ * o.b_;
  const Rational cross = a_ * o.b_ + b_ * o.a_;
  if (n_ == 3) {
    // zeta^2 = -1 - zeta
    a_ = ac - bd;
    b_ = cross - bd;
  } else {
    // zeta^2 = -1
    a_ = ac - bd;
    b_ = cross;
  }
  return *this;
}

bool operator==(const Cyclo& x, const Cyclo& y) {
  if (x.a_ != y.a_ || x.b_ != y.b_) return false;
  return x.b_.is_zero() || x.n_ == y.n_;
}

Cyclo Cyclo::conj() const {
  if (n_ == 3) return Cyclo(3, a_ - b_, -b_);  // conj(zeta3) = zeta3^2 = -1 - zeta3
  if (n_ == 4) return Cyclo(4, a_, -b_);
  return *this;
}

Rational Cyclo::norm() const {
  if (n_ == 3) return a_ * a_ - a_ * b_ + b_ * b_;
  if (n_ == 4) return a_ * a_ + b_ * b_;
  return a_ * a_;
}

Cyclo Cyclo::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  if (b_.is_zero()) return Cyclo(n_, a_.inverse(), Rational(0));
  const Rational inv = norm().inverse();
  Cyclo c = conj();
  c.a_ *= inv;
  c.b_ *= inv;
  return c;
}

std::complex<double> Cyclo::embed() const {
  const double a = a_.to_double();
  const double b = b_.to_double();
  if (n_ == 3) return {a - 0.5 * b, b * std::sqrt(3.0) / 2.0};
  if (n_ == 4) return {a, b};
  return {a, 0.0};
}

std::string Cyclo::str() const {
  if (b_.is_zero()) return a_.str();
  const std::string z = "zeta" + std::to_string(n_);
  std::string s;
  if (!a_.is_zero()) s = a_.str() + (b_.sign() < 0 ? " - " : " + ");
  else if (b_.sign() < 0) s = "-";
  const Rational mag = b_.abs();
  if (!mag.is_one()) s += mag.str() + "*";
  return s + z;
}

std::ostream& operator<<(std::ostream& os, const Cyclo& c) { return os << c.str(); }

Rational to_rational(const Cyclo& c) {
  if (!c.is_rational()) throw ConductorMismatch("value " + c.str() + " is not rational");
  return c.a();
}

}  // namespace qmf
