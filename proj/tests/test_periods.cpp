#include <doctest.h>

#include <chrono>
#include <cmath>

#include "qmf/eisenstein.hpp"
#include "qmf/errors.hpp"
#include "qmf/periods.hpp"

using namespace qmf;

namespace {
constexpr mpfr_prec_t kPrec = 256;

BigFloat tol(long bits) { return ldexp_one(-bits, kPrec); }
}  // namespace

TEST_CASE("hypergeometric series coefficients") {
  const QSeries F = hypergeom_series(kFirstKind, 3);
  CHECK(F.coeff(0) == Rational(1));
  CHECK(F.coeff(1) == Rational(5, 36));
  CHECK(F.coeff(2) == Rational(5, 36) * Rational(7 * 11, 36 * 4));
  const QSeries geo = hypergeom_series({Rational(1), Rational(1), Rational(1)}, 10);
  for (long n = 0; n <= 10; ++n) CHECK(geo.coeff(n) == Rational(1));
  CHECK_THROWS_AS(hypergeom_series({Rational(1), Rational(1), Rational(-2)}, 4), BadC);
  CHECK_THROWS_AS(hypergeom_series({Rational(1), Rational(1), Rational(0)}, 4), BadC);
}

TEST_CASE("both periods solve their hypergeometric equation") {
  for (PFKind k : {PFKind::FirstKind, PFKind::SecondKind}) {
    const QSeries r = picard_fuchs_residual(k, 40);
    CHECK(r.N() == 40);
    CHECK(r.is_known_zero());
  }
  // the wrong constant term is detected at tau^0
  const QSeries G = hypergeom_series(kSecondKind, 20);
  CHECK_FALSE(picard_fuchs_residual(PFKind::FirstKind, G).is_known_zero());
  QSeries F = hypergeom_series(kFirstKind, 20);
  F = F + pad_to(QSeries::from_coeffs({0, 0, 0, 0, 0, Rational(1, 1000)}), 20);
  const QSeries r = picard_fuchs_residual(PFKind::FirstKind, F);
  CHECK_FALSE(r.is_known_zero());
}

TEST_CASE("holomorphic correction and q(tau)") {
  const auto f = f_recursion(6);
  CHECK(f[0] == Rational(0));
  CHECK(f[1] == Rational(13, 18));
  CHECK(f[2] == Rational(719, 1728));
  // h_n (psi(1/6+n) + psi(5/6+n) - 2 psi(n+1) - psi(1/6) - psi(5/6) + 2 psi(1)), 25 digits
  CHECK(std::abs(f[3].to_double() - 0.2913009084616166234821927) < 1e-15);
  CHECK(std::abs(f[4].to_double() - 0.2239505560858244671092370) < 1e-15);
  const QSeries q = qtau_map(6);
  CHECK(q.valuation() == 1);
  CHECK(q.coeff(1) == Rational(1, 432));
  CHECK(q.coeff(2) == Rational(13, 7776));
  const QSeries back = compose(revert(q), q);
  CHECK(back.coeff(1) == Rational(1));
  for (long n = 2; n <= back.N(); ++n) CHECK(back.coeff(n) == Rational(0));
}

TEST_CASE("periods reproduce the divisor-sum Eisenstein series") {
  const long N = 100;
  const auto t0 = std::chrono::steady_clock::now();
  const PeriodEisenstein e = eisenstein_via_periods(N);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  MESSAGE("eisenstein_via_periods(100): " << secs << " s");
  CHECK(secs < 60.0);
  const QSeries E2 = eisenstein_divisor(1, N), E4 = eisenstein_divisor(2, N), E6 = eisenstein_divisor(3, N);
  CHECK(e.e2.N() >= N);
  CHECK(first_difference(e.e2.truncate(N), E2) == std::nullopt);
  CHECK(first_difference(e.e4.truncate(N), E4) == std::nullopt);
  CHECK(first_difference(e.e6.truncate(N), E6) == std::nullopt);
}

TEST_CASE("numeric hypergeometric values") {
  // F(1, 1, 1 | z) = 1/(1 - z)
  const BigComplex z(Rational(1, 2), Rational(1, 3), kPrec);
  const HypergeomValue g = hypergeom_numeric({Rational(1), Rational(1), Rational(1)}, z, kPrec);
  const BigComplex exact = BigComplex(BigFloat(1L, kPrec)) / (BigComplex(BigFloat(1L, kPrec)) - z);
  CHECK(abs(g.value - exact) < tol(240));
  CHECK(g.tail_bound < tol(250) * abs(g.value));
  // F(1/2, 1/2, 3/2 | x^2) = asin(x)/x at x = 1/2: pi/3
  const HypergeomValue a = hypergeom_numeric({Rational(1, 2), Rational(1, 2), Rational(3, 2)}, BigComplex(BigFloat(Rational(1, 4), kPrec)), kPrec);
  CHECK(abs(a.value - BigComplex(pi(kPrec) / BigFloat(3L, kPrec))) < tol(240));
  // terminating
  const HypergeomValue t = hypergeom_numeric({Rational(-2), Rational(1), Rational(1)}, BigComplex(BigFloat(Rational(1, 2), kPrec)), kPrec);
  CHECK(t.value.real() == BigFloat(Rational(1, 4), kPrec));
  CHECK_THROWS_AS(hypergeom_numeric(kFirstKind, BigComplex(BigFloat(Rational(24, 25), kPrec)), kPrec), OutOfDomain);
}

TEST_CASE("continuation past 0.95") {
  // F(1, 1, 2 | x) = -ln(1 - x)/x
  const HypergeomParams p{Rational(1), Rational(1), Rational(2)};
  for (const Rational& x : {Rational(97, 100), Rational(999999, 1000000)}) {
    const BigFloat xv(x, kPrec);
    const BigFloat exact = -log(BigFloat(1L, kPrec) - xv) / xv;
    const BigFloat got = hypergeom_real(p, xv, kPrec);
    CHECK(abs(got - exact) < tol(230) * abs(exact));
  }
}

TEST_CASE("Schwarz map") {
  const BigComplex i = imag_unit(kPrec);
  const BigComplex half(BigFloat(Rational(1, 2), kPrec));
  CHECK(abs(schwarz_map(half, kPrec) - i) < tol(240));
  const BigComplex on_arc(BigFloat(Rational(1, 2), kPrec), BigFloat(Rational(1, 5), kPrec));
  const BigFloat m = abs(schwarz_map(on_arc, kPrec));
  CHECK(abs(m - BigFloat(1L, kPrec)) < BigFloat(1e-30, kPrec));
  CHECK(schwarz_map(BigComplex(BigFloat(Rational(1, 4), kPrec)), kPrec).imag() > BigFloat(kPrec));
  CHECK_THROWS_AS(schwarz_map(BigComplex(BigFloat(Rational(1, 50), kPrec)), kPrec), OutOfDomain);
  CHECK_THROWS_AS(schwarz_map(BigComplex(BigFloat(Rational(49, 50), kPrec)), kPrec), OutOfDomain);

  const auto pts = schwarz_boundary(5, 128);
  CHECK(pts.size() == 10);
  for (const auto& pt : pts) {
    if (pt.family == "arc") CHECK(abs(abs(pt.p) - BigFloat(1L, 128)) < BigFloat(1e-30, 128));
    else CHECK(pt.p.real() == BigFloat(128));
  }
  const std::string csv = boundary_csv(pts, 10);
  CHECK(csv.rfind("family,tau_re,tau_im,p_re,p_im\n", 0) == 0);
}

TEST_CASE("period matrix") {
  const LegendreReport r = legendre_check(Rational(0), kPrec);
  CHECK(r.im_ratio > BigFloat(kPrec));
  const BigFloat two_pi = pi(kPrec) * BigFloat(2L, kPrec);
  // the determinant is purely imaginary with modulus 2 pi
  CHECK(abs(r.lhs.real()) < tol(200));
  CHECK(abs(abs(r.lhs) - two_pi) < tol(200));
  MESSAGE("lhs = " << r.lhs.str(30) << ", |lhs - 2 pi i| = " << r.deviation.str(5) << ", |lhs + 2 pi i| = " << r.conj_deviation.str(5));
  // independent of psi
  const LegendreReport s = legendre_check(Rational(-1, 3), kPrec);
  CHECK(abs(s.lhs - r.lhs) < tol(200));
  CHECK_THROWS_AS(legendre_check(Rational(2), kPrec), OutOfDomain);
  CHECK_THROWS_AS(legendre_check(Rational(19, 10), kPrec), OutOfDomain);
}

TEST_CASE("constant a from the degeneration at tau = 0") {
  CHECK_THROWS_AS(a_constant_check(64), OutOfDomain);
  const AConstantReport rep = a_constant_check(160);
  REQUIRE(rep.samples.size() == 3);
  const BigFloat target(Rational(1, 432), 160);
  // approach is monotone and the extrapolation lands within 4 digits
  const BigFloat d4 = abs(rep.samples[0].a - target), d6 = abs(rep.samples[1].a - target), d8 = abs(rep.samples[2].a - target);
  CHECK(d6 < d4);
  CHECK(d8 < d6);
  CHECK(rep.deviation < target * BigFloat(1e-4, 160));
  CHECK(abs(rep.V_extrapolated.imag() - rep.target_im) < BigFloat(1e-8, 160));

  // V(tau) - V(0) = (f/F)(tau)/(2 pi i) exactly; compare with the series
  const QSeries fF = QSeries::from_coeffs(f_recursion(12)) / hypergeom_series(kFirstKind, 12);
  const BigFloat tau(Rational(1, 10000), 160);
  BigFloat s(160), pw(1L, 160);
  for (long n = 0; n <= 12; ++n) {
    s += BigFloat(fF.coeff(n), 160) * pw;
    pw *= tau;
  }
  const BigFloat two_pi = pi(160) * BigFloat(2L, 160);
  // Im V = ln(432)/(2 pi) - (f/F)/(2 pi)
  const BigFloat predicted = rep.target_im - s / two_pi;
  CHECK(abs(rep.samples[0].V.imag() - predicted) < BigFloat(1e-40, 160));
}

TEST_CASE("a0 by quadrature") {
  const BigFloat a0 = a0_quadrature(200);
  const BigFloat exact = pi(200) / sqrt(BigFloat(3L, 200));
  CHECK(abs(a0 - exact) < BigFloat(1e-30, 200));
}
