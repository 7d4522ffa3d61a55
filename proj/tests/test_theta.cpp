#include <doctest.h>

#include "qmf/eisenstein.hpp"
#include "qmf/theta.hpp"

using namespace qmf;

namespace {
// pentagonal numbers k(3k-1)/2 with sign (-1)^k, an independent oracle for the product
QSeries pentagonal(long N) {
  QSeries s(1, 0, N, {});
  for (long k = -40; k <= 40; ++k) {
    const long e = k * (3 * k - 1) / 2;
    if (e <= N) s.at(e) += Rational(k % 2 == 0 ? 1 : -1);
  }
  return s;
}
}  // namespace

TEST_CASE("theta constants by direct summation") {
  const QSeries t2 = theta_constant(2, 4);
  CHECK(t2.d() == 8);
  CHECK(t2.coeff_at(1, 8) == Rational(2));
  CHECK(t2.coeff_at(9, 8) == Rational(2));
  CHECK(t2.coeff_at(25, 8) == Rational(2));
  CHECK(t2.coeff_at(2, 8) == Rational(0));
  CHECK(t2.valuation() == 1);

  const QSeries t3 = theta_constant(3, 5);
  const QSeries t4 = theta_constant(4, 5);
  CHECK(t3.d() == 2);
  CHECK(t3.coeff_at(0) == Rational(1));
  CHECK(t3.coeff_at(1, 2) == Rational(2));
  CHECK(t3.coeff_at(2) == Rational(2));
  CHECK(t3.coeff_at(9, 2) == Rational(2));
  CHECK(t3.coeff_at(1) == Rational(0));
  CHECK(t4.coeff_at(1, 2) == Rational(-2));
  CHECK(t4.coeff_at(2) == Rational(2));
  CHECK(t4.coeff_at(9, 2) == Rational(-2));
  // theta_4(q) = theta_3(-q^(1/2)) : alternate signs on odd numerators
  for (long k = 0; k <= t3.N(); ++k) CHECK(t4.coeff(k) == (k % 2 == 0 ? t3.coeff(k) : -t3.coeff(k)));
  CHECK_THROWS_AS(theta_constant(1, 3), Error);
}

TEST_CASE("eta expansion") {
  CHECK(euler_product(60) == pentagonal(60));
  const QSeries eta = dedekind_eta(10);
  CHECK(eta.d() == 24);
  CHECK(eta.coeff_at(1, 24) == Rational(1));
  CHECK(eta.coeff_at(25, 24) == Rational(-1));
  CHECK(eta.coeff_at(49, 24) == Rational(-1));
  CHECK(eta.coeff_at(73, 24) == Rational(0));
  // eta^24 = q prod (1-q^n)^24
  const QSeries e24 = pow(dedekind_eta(8), 24);
  CHECK(e24.reduced().d() == 1);
  CHECK(e24 == pow(euler_product(8), 24).shift(1));
}

TEST_CASE("Halphen solution from theta log-derivatives") {
  const HalphenTriple u = halphen_solution(50);
  CHECK(u.u2.coeff_at(0) == Rational(1, 4));
  CHECK(u.u1.coeff_at(0) == Rational(0));
  CHECK(u.u3.coeff_at(0) == Rational(0));
  CHECK(u.u2.d() == 1);
  CHECK(u.u1.d() == 2);
  // the symmetric combination is integral
  CHECK((u.u1 + u.u3).reduced().d() == 1);
  for (const QSeries& r : halphen_residual(u)) {
    CHECK(r.is_known_zero());
    CHECK(r.N() >= 100);
  }
  CHECK(darboux_residual(u).is_known_zero());

  HalphenTriple bad = u;
  bad.u3.at(6) += Rational(1, 5);
  CHECK_FALSE(halphen_residual(bad)[0].is_known_zero());
}

TEST_CASE("theta-Eisenstein identities") {
  const auto ids = theta_eisenstein_identities(30);
  REQUIRE(ids.size() == 3);
  for (const auto& id : ids) CHECK_MESSAGE(id.holds(), id.str());
  CHECK(ids[0].lhs.coeff_at(0) == Rational(1, 12));
  CHECK(ids[0].lhs.coeff_at(1) == Rational(-2));
  CHECK(ids[0].rhs.coeff_at(1) == Rational(-2));
  // identity (i) pins E2 as the Ramanujan recursion does
  CHECK(ids[0].lhs == solve_ramanujan(30).t1);
}

TEST_CASE("identity report names the first difference") {
  SeriesIdentity id = make_identity("demo", QSeries::from_coeffs({1, 2, 3}), QSeries::from_coeffs({1, 2, 4}));
  CHECK_FALSE(id.holds());
  CHECK(*id.first_difference == Rational(2));
  CHECK(id.str() == "demo: differs at q^2: lhs=3 rhs=4");
}

TEST_CASE("Delta from Eisenstein series and from the eta product") {
  const SeriesIdentity r = delta_product_report(40);
  CHECK_MESSAGE(r.holds(), r.str());
  CHECK(r.lhs.coeff(1) == Rational(1));
  CHECK(r.lhs.coeff(2) == Rational(-24));
  CHECK(r.lhs.coeff(3) == Rational(252));
  CHECK(r.rhs.coeff(3) == Rational(252));
  CHECK(r.rhs.coeff(4) == Rational(-1472));
  CHECK(delta_product_check(12));
}

TEST_CASE("Ohyama eta quotients") {
  const OhyamaEtaReport r = ohyama_eta_series(20);
  for (std::size_t i = 0; i < r.residuals.size(); ++i) {
    CHECK_MESSAGE(r.residuals[i].is_known_zero(), "residual " << i << " first nonzero numerator " << r.residuals[i].valuation());
  }
  CHECK(r.holds());
  CHECK(r.t[1].coeff(0) == Cyclo(Rational(1, 3)));
  CHECK(r.t[0].coeff(0) == Cyclo(0));
}
