#pragma once

#include <string>
#include <vector>

#include "qmf/bigfloat.hpp"
#include "qmf/series.hpp"

namespace qmf {

/// Parameters of F(a, b, c | z); c must not be 0, -1, -2, ...
struct HypergeomParams {
  Rational a, b, c;
  void validate() const;
};

inline const HypergeomParams kFirstKind{Rational(1, 6), Rational(5, 6), Rational(1)};
inline const HypergeomParams kSecondKind{Rational(-1, 6), Rational(7, 6), Rational(1)};

// ---- exact part: series in tau = (psi + 2)/4 ----

/// sum (a)_n (b)_n / ((c)_n n!) tau^n through tau^N. Throws BadC.
QSeries hypergeom_series(const HypergeomParams& p, long N);

/// d/dtau, valid one order less.
QSeries tau_derivative(const QSeries& f);

enum class PFKind { FirstKind, SecondKind };

/// tau(tau-1) F'' + (2 tau - 1) F' + c0 F with c0 = 5/36 (first kind) or
/// -7/36 (second kind); the psi-form (psi^2-4) I'' + 2 psi I' + c0 I
/// becomes this under psi = 4 tau - 2.
QSeries picard_fuchs_residual(PFKind kind, const QSeries& F);
/// Residual of the matching hypergeometric solution, valid through tau^N.
QSeries picard_fuchs_residual(PFKind kind, long N);

/// f_0 .. f_N of the holomorphic correction f in the delta_1 period.
std::vector<Rational> f_recursion(long N);

/// q = (1/432) tau exp(f(tau)/F(1/6,5/6,1|tau)) through tau^N.
QSeries qtau_map(long N);

struct PeriodEisenstein {
  QSeries e2, e4, e6;
};
/// E2 = F(-1/6,7/6,1)F(1/6,5/6,1), E4 = F^4, E6 = (1-2tau)F^6 composed with
/// tau(q), the reversion of qtau_map. Valid through q^N.
PeriodEisenstein eisenstein_via_periods(long N);

// ---- numeric part ----

struct HypergeomValue {
  BigComplex value;
  /// bound on the omitted tail, certified before returning
  BigFloat tail_bound;
  long terms = 0;
};

/// Direct summation for |z| <= 0.95 (OutOfDomain otherwise). Terms are added
/// until the geometric tail bound drops below 2^-(prec+8) |sum|; hitting the
/// iteration cap throws ConvergenceFailure.
HypergeomValue hypergeom_numeric(const HypergeomParams& p, const BigComplex& z, mpfr_prec_t prec);

/// F at a real x in (0, 1): direct summation up to 0.95, beyond that Taylor
/// steps of the hypergeometric equation from 1/2, each step at most half
/// the distance to the singular point 1.
BigFloat hypergeom_real(const HypergeomParams& p, const BigFloat& x, mpfr_prec_t prec);

/// Y = [[int_d1 dx/y, int_d2 dx/y], [int_d1 x dx/y, int_d2 x dx/y]] for
/// y^2 = 4x^3 - 12x + 4 psi.
struct PeriodMatrix {
  BigComplex y11, y12, y21, y22;
};
PeriodMatrix period_matrix(const Rational& psi, mpfr_prec_t prec);

struct LegendreReport {
  BigComplex lhs;           // y11 y22 - y12 y21
  BigFloat deviation;       // |lhs - 2 pi i|
  BigFloat conj_deviation;  // |lhs + 2 pi i|, diagnostic
  BigFloat im_ratio;        // Im(y11 / y12)
};
/// Needs both (psi +- 2)/4 at most 0.95, otherwise OutOfDomain.
LegendreReport legendre_check(const Rational& psi, mpfr_prec_t prec);

/// p(tau) = i F(1/6,5/6,1 | 1-tau) / F(1/6,5/6,1 | tau) for |tau| < 0.95 and
/// |1 - tau| < 0.95 (OutOfDomain otherwise).
BigComplex schwarz_map(const BigComplex& tau, mpfr_prec_t prec);

struct AConstantSample {
  int k = 0;       // tau = 10^-k
  BigComplex V;    // y11/y12 - ln(tau)/(2 pi i)
  BigFloat a;      // Re exp(2 pi i V)
};
struct AConstantReport {
  std::vector<AConstantSample> samples;
  BigComplex V_extrapolated;  // Richardson in tau across the last two samples
  BigFloat a_extrapolated;
  BigFloat target_im;         // ln(432)/(2 pi)
  BigFloat deviation;         // |a_extrapolated - 1/432|
};
/// Samples at tau = 1e-4, 1e-6, 1e-8. Needs prec >= 128 (OutOfDomain).
AConstantReport a_constant_check(mpfr_prec_t prec);

/// 2 int_2^inf dx / (2 (x+1) sqrt(x-2)) by double-exponential quadrature.
BigFloat a0_quadrature(mpfr_prec_t prec);

struct BoundaryPoint {
  std::string family;  // "arc" for tau = 1/2 + ix, "axis" for real tau
  BigComplex tau;
  BigComplex p;
};
/// Images of tau = 1/2 + ix (|x| <= 0.8) and of real tau in [0.06, 0.5].
std::vector<BoundaryPoint> schwarz_boundary(int samples, mpfr_prec_t prec);
std::string boundary_csv(const std::vector<BoundaryPoint>& pts, int digits = 17);

}  // namespace qmf
