#include "doctest.h"

#include <complex>
#include <random>

#include "qmf/bigfloat.hpp"
#include "qmf/cyclo.hpp"
#include "qmf/errors.hpp"
#include "qmf/rational.hpp"

using namespace qmf;

// digits frozen from an independent multiprecision package
static const char* kPiDigits = "3.14159265358979323846264338327950288419716939937510582097494";
static const char* kPiOverSqrt3 = "1.81379936423421785059407825764215573228406624809274057556988";

TEST_CASE("rational arithmetic is exact and canonical") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK((Rational(1, 3) + Rational(1, 6)).str() == "1/2");
  CHECK(Rational(6, -4).str() == "-3/2");
  CHECK(Rational::parse("-10/4") == Rational(-5, 2));
  CHECK(Rational::parse(" 7 ").str() == "7");
  CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
  CHECK_THROWS_AS(Rational(0).inverse(), DivisionByZero);
  CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZero);
  CHECK_THROWS_AS(Rational::parse("1/x"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/0"), DivisionByZero);
  CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
  CHECK(pochhammer(Rational(1, 6), 2) == Rational(7, 36));
  Rational r;
  CHECK(exact_root(Rational(-8, 27), 3, r));
  CHECK(r == Rational(-2, 3));
  CHECK_FALSE(exact_root(Rational(2), 2, r));
}

TEST_CASE("cyclotomic arithmetic") {
  const Cyclo z3 = Cyclo::zeta(3);
  CHECK((z3 * z3 + z3 + Cyclo(1)).is_zero());
  const Cyclo i = Cyclo::zeta(4);
  CHECK((Cyclo(1) + i) * (Cyclo(1) - i) == Cyclo(2));
  CHECK(i * i == Cyclo(-1));
  CHECK(z3 * z3 * z3 == Cyclo(1));
  CHECK(z3.inverse() * z3 == Cyclo(1));
  CHECK_THROWS_AS(z3 + i, ConductorMismatch);
  CHECK_THROWS_AS(Cyclo(0).inverse(), DivisionByZero);
  CHECK(Cyclo(Rational(1, 2)) + z3 == Cyclo(3, Rational(1, 2), Rational(1)));
  CHECK(z3.str() == "zeta3");
  CHECK((Cyclo(2) - Cyclo(3, 0, 3)).str() == "2 - 3*zeta3");
}

TEST_CASE("cyclotomic products agree with the complex embedding") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> dist(-20, 20);
  auto draw = [&](int n) { return Cyclo(n, Rational(dist(rng), 1 + std::abs(dist(rng))), Rational(dist(rng), 1 + std::abs(dist(rng)))); };
  for (int trial = 0; trial < 500; ++trial) {
    for (int n : {3, 4}) {
      const Cyclo a = draw(n), b = draw(n);
      const std::complex<double> lhs = (a * b).embed();
      const std::complex<double> rhs = a.embed() * b.embed();
      CHECK(std::abs(lhs - rhs) <= 1e-9 * (1 + std::abs(rhs)));
      if (!b.is_zero()) CHECK(std::abs((a / b).embed() - a.embed() / b.embed()) <= 1e-9 * (1 + std::abs(a.embed() / b.embed())));
    }
  }
}

TEST_CASE("pi at 64 and 128 bits") {
  const BigComplex p64 = pi_value(64);
  const BigFloat ref(kPiDigits, 256);
  // 64-bit mantissa: relative error below 2^-63
  CHECK(abs(p64.real() - ref) / ref < ldexp_one(-63, 256));
  CHECK(p64.real().str(18) == "3.14159265358979324e+00");
  const BigComplex p128 = pi_value(128);
  CHECK(BigFloat(p128.real().to_double(), 64) == BigFloat(p64.real().to_double(), 64));
  BigFloat rounded(64);
  mpfr_set(rounded.get(), p128.real().get(), MPFR_RNDN);
  CHECK(rounded == p64.real());
  CHECK_THROWS_AS(pi_value(32), OutOfDomain);
}

TEST_CASE("pi over sqrt 3") {
  const BigFloat v = pi(128) / sqrt(BigFloat(3L, 128));
  CHECK(abs(v - BigFloat(kPiOverSqrt3, 256)) < ldexp_one(-125, 256));
  CHECK(std::abs(v.to_double() - 3.141592653589793 / std::sqrt(3.0)) < 1e-15);
}

TEST_CASE("hexfloat round trip") {
  const BigComplex z(pi(200), -sqrt(BigFloat(2L, 200)));
  const BigComplex back = BigComplex::parse_hex(z.hex(), 200);
  CHECK(back == z);
  CHECK_THROWS_AS(BigFloat("nonsense", 64), ParseError);
}

TEST_CASE("complex elementary functions") {
  const mpfr_prec_t p = 128;
  const BigComplex i = imag_unit(p);
  CHECK(abs(i * i + BigComplex(BigFloat(1L, p))) < ldexp_one(-120, p));
  const BigComplex e = exp(i * pi_value(p));
  CHECK(abs(e + BigComplex(BigFloat(1L, p))) < ldexp_one(-120, p));
  const BigComplex z(BigFloat(-3L, p), BigFloat(4L, p));
  CHECK(abs(exp(log(z)) - z) < ldexp_one(-118, p));
  const BigComplex s = sqrt(z);
  CHECK(abs(s * s - z) < ldexp_one(-118, p));
  CHECK(s.real().sign() > 0);
}
