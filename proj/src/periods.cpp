#include "qmf/periods.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <limits>

#include "qmf/errors.hpp"

namespace qmf {

void HypergeomParams::validate() const {
  if (c.is_integer() && c.sign() <= 0) throw BadC("c = " + c.str() + " is a nonpositive integer");
}

QSeries hypergeom_series(const HypergeomParams& p, long N) {
  p.validate();
  if (N < 0) throw TruncationError("hypergeom_series needs N >= 0");
  std::vector<Rational> c(static_cast<std::size_t>(N + 1));
  c[0] = Rational(1);
  for (long n = 0; n < N; ++n) {
    c[static_cast<std::size_t>(n + 1)] =
        c[static_cast<std::size_t>(n)] * (p.a + Rational(n)) * (p.b + Rational(n)) / ((p.c + Rational(n)) * Rational(n + 1));
  }
  return QSeries::from_coeffs(std::move(c));
}

QSeries tau_derivative(const QSeries& f) {
  if (f.d() != 1) throw InvalidValuation("tau_derivative works on the integer lattice");
  return derive(f).shift(-1);
}

QSeries picard_fuchs_residual(PFKind kind, const QSeries& F) {
  const Rational c0 = kind == PFKind::FirstKind ? Rational(5, 36) : Rational(-7, 36);
  const QSeries F1 = tau_derivative(F);
  const QSeries F2 = tau_derivative(F1);
  // polynomial coefficients are exact, so give them the validity of F
  const QSeries ttm1 = pad_to(QSeries::from_coeffs({0, -1, 1}), F.N());
  const QSeries twotm1 = pad_to(QSeries::from_coeffs({-1, 2}), F.N());
  return ttm1 * F2 + twotm1 * F1 + F * c0;
}

QSeries picard_fuchs_residual(PFKind kind, long N) {
  const QSeries F = hypergeom_series(kind == PFKind::FirstKind ? kFirstKind : kSecondKind, N + 2);
  return picard_fuchs_residual(kind, F).truncate(N);
}

std::vector<Rational> f_recursion(long N) {
  if (N < 0) throw TruncationError("f_recursion needs N >= 0");
  const Rational s(1, 6), t(5, 6);
  std::vector<Rational> f(static_cast<std::size_t>(N + 1));
  // h_n = (1/6)_n (5/6)_n / (n!)^2
  Rational h(1);
  for (long n = 0; n < N; ++n) {
    const Rational n1(n + 1);
    const Rational h1 = h * (s + Rational(n)) * (t + Rational(n)) / (n1 * n1);
    // L(F ln tau) = 2(tau - 1)F' + F, so L f = -(2(tau - 1)F' + F) order by order
    f[static_cast<std::size_t>(n + 1)] = (Rational(n) + s) * (Rational(n) + t) / (n1 * n1) * f[static_cast<std::size_t>(n)] +
                                         h * Rational(2 * n + 1) / (n1 * n1) - Rational(2) / n1 * h1;
    h = h1;
  }
  return f;
}

QSeries qtau_map(long N) {
  if (N < 1) throw TruncationError("qtau_map needs N >= 1");
  const QSeries f = QSeries::from_coeffs(f_recursion(N));
  const QSeries F = hypergeom_series(kFirstKind, N);
  return (exp(f / F).shift(1) * Rational(1, 432)).truncate(N);
}

PeriodEisenstein eisenstein_via_periods(long N) {
  if (N < 1) throw TruncationError("eisenstein_via_periods needs N >= 1");
  const QSeries tq = revert(qtau_map(N));
  const QSeries F = hypergeom_series(kFirstKind, N);
  const QSeries G = hypergeom_series(kSecondKind, N);
  const QSeries F2 = F * F;
  const QSeries F4 = F2 * F2;
  const QSeries one_m_2t = pad_to(QSeries::from_coeffs({1, -2}), N);
  return {compose(G * F, tq), compose(F4, tq), compose(one_m_2t * F4 * F2, tq)};
}

// ---------------------------------------------------------------------------

namespace {

BigFloat bf(const Rational& r, mpfr_prec_t p) { return BigFloat(r, p); }

BigComplex scale(const BigComplex& z, const BigFloat& s) { return {z.real() * s, z.imag() * s}; }

// |z| (1 + |a|/m)(1 + |b|/m) / (1 - |c|/m) bounds every later term ratio
BigFloat ratio_bound(const HypergeomParams& p, const BigFloat& absz, long m, mpfr_prec_t w) {
  const Rational mm(m);
  const Rational f = (Rational(1) + p.a.abs() / mm) * (Rational(1) + p.b.abs() / mm) / (Rational(1) - p.c.abs() / mm);
  return absz * bf(f, w);
}

}  // namespace

HypergeomValue hypergeom_numeric(const HypergeomParams& p, const BigComplex& z, mpfr_prec_t prec) {
  p.validate();
  const mpfr_prec_t w = prec + 32;
  const BigFloat absz = abs(z);
  if (absz > bf(Rational(19, 20), w)) throw OutOfDomain("|z| = " + absz.str(6) + " exceeds 0.95");
  const BigFloat eps = ldexp_one(-(static_cast<long>(prec) + 8), w);
  const long cap = 200000;

  HypergeomValue out{BigComplex(BigFloat(1L, w), BigFloat(w)), BigFloat(w), 1};
  BigComplex term(BigFloat(1L, w), BigFloat(w));
  for (long n = 0; n < cap; ++n) {
    const Rational r = (p.a + Rational(n)) * (p.b + Rational(n)) / ((p.c + Rational(n)) * Rational(n + 1));
    term = scale(term, bf(r, w)) * z;
    out.terms = n + 2;
    if (term.real().is_zero() && term.imag().is_zero()) {
      // terminating series or z = 0
      out.tail_bound = BigFloat(w);
      return out;
    }
    out.value += term;
    const long m = n + 1;
    if (Rational(m) <= p.c.abs()) continue;
    const BigFloat rho = ratio_bound(p, absz, m, w);
    if (!(rho < BigFloat(1L, w))) continue;
    const BigFloat tail = abs(term) * rho / (BigFloat(1L, w) - rho);
    if (tail <= eps * abs(out.value)) {
      out.tail_bound = tail;
      return out;
    }
  }
  throw ConvergenceFailure("hypergeometric series did not reach the tail bound in " + std::to_string(cap) + " terms");
}

BigFloat hypergeom_real(const HypergeomParams& p, const BigFloat& x, mpfr_prec_t prec) {
  p.validate();
  const mpfr_prec_t w = prec + 64;
  const BigFloat one(1L, w);
  if (!(x > BigFloat(w)) || !(x < one)) throw OutOfDomain("hypergeom_real needs 0 < x < 1");
  if (x <= bf(Rational(19, 20), w)) return hypergeom_numeric(p, BigComplex(x), w).value.real();

  // start at 1/2 with F and F' = (ab/c) F(a+1, b+1, c+1)
  BigFloat z0 = bf(Rational(1, 2), w);
  BigFloat F0 = hypergeom_numeric(p, BigComplex(z0), w).value.real();
  const HypergeomParams dp{p.a + Rational(1), p.b + Rational(1), p.c + Rational(1)};
  BigFloat D0 = hypergeom_numeric(dp, BigComplex(z0), w).value.real() * bf(p.a * p.b / p.c, w);

  const BigFloat eps = ldexp_one(-(static_cast<long>(w) - 8), w);
  const BigFloat A = bf(p.a, w), B = bf(p.b, w), C = bf(p.c, w), S1 = bf(p.a + p.b + Rational(1), w);
  for (int step = 0; z0 < x; ++step) {
    if (step > 4096) throw ConvergenceFailure("analytic continuation needs too many steps");
    const BigFloat R = one - z0;
    BigFloat h = R * bf(Rational(1, 2), w);
    if (x - z0 < h) h = x - z0;
    // Taylor coefficients of the hypergeometric equation at z0
    const BigFloat q0 = z0 * (one - z0);
    const BigFloat lin = one - z0 - z0;
    const BigFloat base = C - S1 * z0;
    BigFloat cm = F0, cn = D0;  // c_n, c_(n+1)
    BigFloat hp = h;            // h^(n+1)
    BigFloat sumF = F0 + D0 * h, sumD = D0;
    int quiet = 0;
    for (long n = 0;; ++n) {
      if (n > 200000) throw ConvergenceFailure("Taylor step did not converge");
      const BigFloat nn(n, w);
      const BigFloat cnext = -((lin * nn + base) * BigFloat(n + 1, w) * cn - (nn + A) * (nn + B) * cm) /
                             (q0 * BigFloat((n + 2) * (n + 1), w));
      const BigFloat termD = cnext * BigFloat(n + 2, w) * hp;
      hp = hp * h;
      const BigFloat termF = cnext * hp;
      sumF += termF;
      sumD += termD;
      cm = cn;
      cn = cnext;
      // ratio of consecutive terms is at most about 1/2 here
      if (abs(termF) <= eps * abs(sumF) && abs(termD) <= eps * (abs(sumD) + one)) {
        if (++quiet >= 4) break;
      } else {
        quiet = 0;
      }
    }
    z0 = z0 + h;
    F0 = sumF;
    D0 = sumD;
  }
  return F0;
}

PeriodMatrix period_matrix(const Rational& psi, mpfr_prec_t prec) {
  const Rational tp = (psi + Rational(2)) / Rational(4);
  const Rational tm = (Rational(2) - psi) / Rational(4);
  const Rational lim(19, 20);
  if (tp.sign() <= 0 || tm.sign() <= 0 || lim < tp || lim < tm) {
    throw OutOfDomain("psi = " + psi.str() + " puts a hypergeometric argument outside (0, 0.95]");
  }
  const mpfr_prec_t w = prec + 32;
  const BigFloat s = pi(w) / sqrt(BigFloat(3L, w));
  const auto F = [&](const HypergeomParams& p, const Rational& t) {
    return hypergeom_numeric(p, BigComplex(bf(t, w)), w).value.real();
  };
  const BigFloat zero(w);
  return {BigComplex(zero, s * F(kFirstKind, tm)), BigComplex(s * F(kFirstKind, tp), zero),
          BigComplex(zero, s * F(kSecondKind, tm)), BigComplex(-(s * F(kSecondKind, tp)), zero)};
}

LegendreReport legendre_check(const Rational& psi, mpfr_prec_t prec) {
  const PeriodMatrix Y = period_matrix(psi, prec);
  const mpfr_prec_t w = Y.y11.prec();
  const BigComplex two_pi_i(BigFloat(w), pi(w) * BigFloat(2L, w));
  LegendreReport r;
  r.lhs = Y.y11 * Y.y22 - Y.y12 * Y.y21;
  r.deviation = abs(r.lhs - two_pi_i);
  r.conj_deviation = abs(r.lhs + two_pi_i);
  r.im_ratio = (Y.y11 / Y.y12).imag();
  return r;
}

BigComplex schwarz_map(const BigComplex& tau, mpfr_prec_t prec) {
  const mpfr_prec_t w = prec + 32;
  const BigFloat lim = bf(Rational(19, 20), w);
  const BigComplex one(BigFloat(1L, w));
  const BigComplex other = one - tau;
  if (!(abs(tau) < lim) || !(abs(other) < lim)) throw OutOfDomain("schwarz_map needs |tau| < 0.95 and |1 - tau| < 0.95");
  const BigComplex num = hypergeom_numeric(kFirstKind, other, w).value;
  const BigComplex den = hypergeom_numeric(kFirstKind, tau, w).value;
  return imag_unit(w) * num / den;
}

AConstantReport a_constant_check(mpfr_prec_t prec) {
  if (prec < 128) throw OutOfDomain("a_constant_check needs at least 128 bits");
  const mpfr_prec_t w = prec + 32;
  const BigFloat two_pi = pi(w) * BigFloat(2L, w);
  AConstantReport rep;
  for (int k : {4, 6, 8}) {
    BigInt ten;
    mpz_ui_pow_ui(ten.get_mpz_t(), 10, static_cast<unsigned long>(k));
    const Rational tau(BigInt(1), ten);
    const BigFloat t = bf(tau, w);
    const BigFloat Ft = hypergeom_numeric(kFirstKind, BigComplex(t), w).value.real();
    const BigFloat F1t = hypergeom_real(kFirstKind, bf(Rational(1) - tau, w), w);
    // y11/y12 = i F(1-tau)/F(tau) and -ln(tau)/(2 pi i) = i ln(tau)/(2 pi)
    const BigFloat v = F1t / Ft + log(t) / two_pi;
    AConstantSample s;
    s.k = k;
    s.V = BigComplex(BigFloat(w), v);
    s.a = exp(-(two_pi * v));
    rep.samples.push_back(s);
  }
  // V(tau) - V(0) is analytic and O(tau): eliminate the linear term
  const BigFloat& v6 = rep.samples[1].V.imag();
  const BigFloat& v8 = rep.samples[2].V.imag();
  const BigFloat v0 = (v8 * BigFloat(100L, w) - v6) / BigFloat(99L, w);
  rep.V_extrapolated = BigComplex(BigFloat(w), v0);
  rep.a_extrapolated = exp(-(two_pi * v0));
  rep.target_im = log(BigFloat(432L, w)) / two_pi;
  rep.deviation = abs(rep.a_extrapolated - bf(Rational(1, 432), w));
  return rep;
}

BigFloat a0_quadrature(mpfr_prec_t prec) {
  using mp = boost::multiprecision::mpfr_float;
  const unsigned old = mp::default_precision();
  const auto digits = static_cast<unsigned>(std::ceil(static_cast<double>(prec) * 0.30103)) + 10;
  mp::default_precision(digits);
  BigFloat out(prec);
  {
    boost::math::quadrature::exp_sinh<mp> q;
    // x = 2 + s keeps the endpoint singularity at s = 0 representable
    const auto f = [](const mp& s) -> mp { return mp(1) / ((s + 3) * sqrt(s)); };
    const mp v = q.integrate(f, mp(0), std::numeric_limits<mp>::infinity());
    mpfr_set(out.get(), v.backend().data(), MPFR_RNDN);
  }
  mp::default_precision(old);
  return out;
}

std::vector<BoundaryPoint> schwarz_boundary(int samples, mpfr_prec_t prec) {
  if (samples < 2) throw Error("schwarz_boundary needs at least 2 samples");
  std::vector<BoundaryPoint> out;
  const mpfr_prec_t w = prec;
  for (int j = 0; j < samples; ++j) {
    const Rational x = Rational(-4, 5) + Rational(8 * j, 5 * (samples - 1));
    const BigComplex tau(bf(Rational(1, 2), w), bf(x, w));
    out.push_back({"arc", tau, schwarz_map(tau, prec)});
  }
  for (int j = 0; j < samples; ++j) {
    const Rational t = Rational(3, 50) + Rational(44 * j, 100 * (samples - 1));
    const BigComplex tau(bf(t, w));
    out.push_back({"axis", tau, schwarz_map(tau, prec)});
  }
  return out;
}

std::string boundary_csv(const std::vector<BoundaryPoint>& pts, int digits) {
  std::string s = "family,tau_re,tau_im,p_re,p_im\n";
  for (const auto& p : pts) {
    s += p.family + "," + p.tau.real().str(digits) + "," + p.tau.imag().str(digits) + "," + p.p.real().str(digits) + "," +
         p.p.imag().str(digits) + "\n";
  }
  return s;
}

}  // namespace qmf
