#include "doctest.h"

#include <random>

#include "qmf/derham.hpp"

using namespace qmf;

namespace {

Poly P(const char* s) { return Poly::parse(s); }

void check_identity(const char* c, const char* beta, const char* alpha) {
  const CohomClass k = reduce(P(c));
  CHECK_MESSAGE(k.beta == Fraction(P(beta)), c);
  CHECK_MESSAGE(k.alpha == Fraction(P(alpha)), c);
}

}  // namespace

TEST_CASE("reduction identities x^2 .. x^5") {
  check_identity("x^2", "2*t1", "-t1^2 + t2/12");
  check_identity("x^3", "3*t1^2 + 3/20*t2", "-2*t1^3 + 1/10*t1*t2 + 1/10*t3");
  check_identity("x^4", "4*t1^3 + 3/5*t1*t2 + 1/7*t3", "-3*t1^4 - 1/10*t1^2*t2 + 9/35*t1*t3 + 5/336*t2^2");
  check_identity("x^5", "5*t1^4 + 3/2*t1^2*t2 + 5/7*t1*t3 + 7/240*t2^2",
                 "-4*t1^5 - 2/3*t1^3*t2 + 2/7*t1^2*t3 + 19/420*t1*t2^2 + 1/30*t2*t3");
}

TEST_CASE("basis elements reduce to themselves") {
  CHECK(reduce(Poly(1)) == CohomClass{Fraction(1), Fraction(0)});
  CHECK(reduce(P("x")) == CohomClass{Fraction(0), Fraction(1)});
}

TEST_CASE("exact generators reduce to zero") {
  for (int a = 0; a <= 8; ++a) {
    const CohomClass k = reduce(exact_generator(a));
    CHECK(k.alpha.is_zero());
    CHECK(k.beta.is_zero());
  }
}

TEST_CASE("reduction is linear") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> coef(-9, 9);
  std::uniform_int_distribution<int> e(0, 2);
  auto random_poly = [&]() {
    Poly p;
    for (int k = 0; k < 6; ++k) p += Poly::term(Rational(coef(rng), 1 + std::abs(coef(rng))), {e(rng), e(rng), e(rng), 0, static_cast<int>(rng() % 7)});
    return p;
  };
  for (int trial = 0; trial < 30; ++trial) {
    const Poly a = random_poly(), b = random_poly();
    CHECK(reduce(a + b) == reduce(a) + reduce(b));
  }
}

TEST_CASE("weights of reduced powers") {
  for (int n = 2; n <= 8; ++n) {
    const CohomClass k = reduce(Poly::var(X, n));
    CHECK(k.alpha.num().weights() == std::set<int>{2 * n});
    CHECK(k.beta.num().weights() == std::set<int>{2 * n - 2});
  }
}

TEST_CASE("cofactors") {
  const Cofactors cf = cofactors();
  CHECK(cf.a1.coeff_of(X, 4) == Poly(-36));
  CHECK(cf.a2.coeff_of(X, 3) == Poly(-108));
  CHECK(-(CurveFamily::dP() * cf.a1) + CurveFamily::P() * cf.a2 == CurveFamily::delta());
  CHECK(cf.a1 == P("-36*x^4 + 144*t1*x^3 + (-216*t1^2 + 15*t2)*x^2 + (144*t1^3 - 30*t1*t2)*x - 36*t1^4 + 15*t1^2*t2 - t2^2"));
  CHECK(cf.a2 == P("-108*x^3 + 324*t1*x^2 + (-324*t1^2 + 27*t2)*x + 108*t1^3 - 27*t1*t2 - 27*t3"));
}
