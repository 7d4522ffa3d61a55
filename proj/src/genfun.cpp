#include "qmf/genfun.hpp"

#include "qmf/eisenstein.hpp"

namespace qmf {

namespace {
struct E246 {
  QSeries e2, e4, e6;
};
E246 eis(long N) { return {eisenstein_divisor(1, N), eisenstein_divisor(2, N), eisenstein_divisor(3, N)}; }

// E4^3 - E6^2 = 1728 q + ...
QSeries discriminant_1728(long N) {
  const E246 e = eis(N);
  return pow(e.e4, 3) - e.e6 * e.e6;
}

std::vector<BigInt> integer_coeffs(const QSeries& s, long from, long to) {
  std::vector<BigInt> out;
  for (long n = from; n <= to; ++n) {
    const Rational c = s.coeff(n);
    if (!c.is_integer()) throw Error("expected an integral coefficient at q^" + std::to_string(n));
    out.push_back(c.num());
  }
  return out;
}
}  // namespace

QSeries j_function(long N) {
  if (N < -1) throw TruncationError("j_function needs N >= -1");
  // the unit part of the denominator is known one order less than its inputs
  const long M = N + 2;
  const QSeries e4 = eisenstein_divisor(2, M);
  return (pow(e4, 3) * Rational(1728) / discriminant_1728(M)).truncate(N);
}

std::vector<BigInt> tau(long N) {
  if (N < 1) throw TruncationError("tau needs N >= 1");
  return integer_coeffs(discriminant_1728(N) * Rational(1, 1728), 1, N);
}

std::vector<BigInt> tau_via_eta(long N) {
  if (N < 1) throw TruncationError("tau needs N >= 1");
  return integer_coeffs(pow(euler_product(N - 1), 24).shift(1), 1, N);
}

QSeries dijkgraaf_F(int g, long N) {
  if (N < 0) throw TruncationError("dijkgraaf_F needs N >= 0");
  const E246 e = eis(N);
  const QSeries& E2 = e.e2;
  const QSeries& E4 = e.e4;
  const QSeries& E6 = e.e6;
  if (g == 2) return (E2 * E2 * E2 * Rational(10) - E2 * E4 * Rational(6) - E6 * Rational(4)) * Rational(1, 103680);
  if (g == 3) {
    const QSeries E2s = E2 * E2;
    // the E2^2 E4^2 term is the weight-12 one
    const QSeries s = pow(E2s, 3) * Rational(-6) + E2s * E2s * E4 * Rational(15) - E2s * E4 * E4 * Rational(12) +
                      pow(E4, 3) * Rational(7) + E2s * E2 * E6 * Rational(4) - E2 * E4 * E6 * Rational(12) +
                      E6 * E6 * Rational(4);
    return s * Rational(1, 35831808);
  }
  throw Error("dijkgraaf_F: g must be 2 or 3");
}

SeriesIdentity F1_check(long N) {
  if (N < 1) throw TruncationError("F1_check needs N >= 1");
  const QSeries lhs = eisenstein_divisor(1, N) * Rational(-1, 24);
  QSeries rhs(1, 0, N, {});
  rhs.at(0) = Rational(-1, 24);
  for (long d = 1; d <= N; ++d) {
    long s = 0;
    for (long i = 1; i <= d; ++i) {
      if (d % i == 0) s += i;
    }
    rhs.at(d) = Rational(s);
  }
  return make_identity("q dF1/dq = -E2/24", lhs, rhs);
}

QSeries yau_zaslow(long N) {
  if (N < 0) throw TruncationError("yau_zaslow needs N >= 0");
  const long M = N + 1;
  return (QSeries::monomial(Rational(1728), 1, M) / discriminant_1728(M)).truncate(N);
}

QSeries bryan_leung(int g, long N) {
  if (g < 0) throw Error("bryan_leung needs g >= 0");
  const QSeries yz = yau_zaslow(N);
  if (g == 0) return yz;
  // -(1/24) D E2 / q
  const QSeries dE2 = derive(eisenstein_divisor(1, N + 1)) * Rational(-1, 24);
  return (pow(dE2.shift(-1), g) * yz).truncate(N);
}

QSeries modularity_eta_product(long N) {
  if (N < 1) throw TruncationError("modularity_eta_product needs N >= 1");
  const QSeries P = euler_product(N - 1);
  return (P * P * pow(dilate(P, 11), 2)).truncate(N - 1).shift(1);
}

}  // namespace qmf
