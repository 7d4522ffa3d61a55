#include "qmf/eisenstein.hpp"

#include "qmf/gaussmanin.hpp"
#include "qmf/linsolve.hpp"

namespace qmf {

RamanujanSeries solve_ramanujan(long N, const Rational& b, const Rational& c) {
  if (N < 1) throw TruncationError("solve_ramanujan needs N >= 1");
  const auto n1 = static_cast<std::size_t>(N + 1);
  std::vector<Rational> t1(n1), t2(n1), t3(n1);
  t1[0] = b;
  t2[0] = Rational(12) * b * b;
  t3[0] = Rational(8) * b * b * b;
  // the n = 1 matrix is singular; its kernel is fixed by the eigenvalue a = 12b
  t1[1] = c * Rational(-24) * b;
  t2[1] = c * Rational(240) * t2[0];
  t3[1] = c * Rational(-504) * t3[0];

  MatrixX<Rational> M(3, 3);
  M << Rational(2) * b, Rational(-1, 12), Rational(0),
      Rational(48) * b * b, Rational(4) * b, Rational(-6),
      Rational(48) * b * b * b, Rational(-8) * b * b, Rational(6) * b;

  for (long n = 2; n <= N; ++n) {
    Rational r1, r2, r3;
    for (long i = 1; i < n; ++i) {
      const auto a = static_cast<std::size_t>(i), z = static_cast<std::size_t>(n - i);
      r1 += t1[a] * t1[z];
      r2 += t1[a] * t2[z];
      r3 += Rational(6) * t1[a] * t3[z] - t2[a] * t2[z] * Rational(1, 3);
    }
    r2 *= Rational(4);
    MatrixX<Rational> A = -M;
    for (int i = 0; i < 3; ++i) A(i, i) += Rational(12 * n) * b;
    VectorX<Rational> rhs(3);
    rhs << r1, r2, r3;
    const VectorX<Rational> x = solve_field<Rational>(A, rhs);
    const auto nn = static_cast<std::size_t>(n);
    t1[nn] = x(0);
    t2[nn] = x(1);
    t3[nn] = x(2);
  }
  return {QSeries::from_coeffs(std::move(t1)), QSeries::from_coeffs(std::move(t2)), QSeries::from_coeffs(std::move(t3))};
}

BigInt divisor_sum(long n, int e) {
  BigInt s = 0;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(e));
    s += p;
    const long e2 = n / d;
    if (e2 != d) {
      mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(e2), static_cast<unsigned long>(e));
      s += p;
    }
  }
  return s;
}

QSeries eisenstein_divisor(int k, long N) {
  static constexpr long kB[] = {-24, 240, -504};
  if (k < 1 || k > 3) throw Error("eisenstein_divisor: k must be 1, 2 or 3");
  if (N < 0) throw TruncationError("eisenstein_divisor needs N >= 0");
  std::vector<Rational> c(static_cast<std::size_t>(N + 1));
  c[0] = Rational(1);
  for (long n = 1; n <= N; ++n) c[static_cast<std::size_t>(n)] = Rational(BigInt(BigInt(kB[k - 1]) * divisor_sum(n, 2 * k - 1)));
  return QSeries::from_coeffs(std::move(c));
}

std::array<QSeries, 3> ramanujan_residual(const RamanujanSeries& t) {
  const Rational r12(1, 12), r3(1, 3);
  return {derive(t.t1) - (t.t1 * t.t1 - t.t2 * r12),
          derive(t.t2) - (Rational(4) * t.t1 * t.t2 - Rational(6) * t.t3),
          derive(t.t3) - (Rational(6) * t.t1 * t.t3 - t.t2 * t.t2 * r3)};
}

QuasiModularPoly QuasiModularPoly::from(const Poly& p) {
  if (p.degree(T4) > 0 || p.degree(X) > 0) throw Error("quasi-modular polynomial must only involve t1, t2, t3");
  const auto w = p.weights();
  if (w.size() > 1) throw Error("quasi-modular polynomial must be weighted-homogeneous: " + p.str());
  QuasiModularPoly q;
  q.p = p;
  q.weight = w.empty() ? 0 : *w.begin();
  q.diff_order = std::max(0, p.degree(T1));
  return q;
}

QuasiModularPoly ring_derivation(const QuasiModularPoly& f) {
  static const VectorField<Rational> R = ramanujan_field();
  QuasiModularPoly r;
  r.p = apply_field(R, f.p);
  r.weight = f.weight + 2;
  r.diff_order = std::max(0, r.p.degree(T1));
  return r;
}

GroupElement group_product(const GroupElement& g1, const GroupElement& g2) {
  if (g1.k.is_zero() || g2.k.is_zero()) throw ZeroScale("group element with k = 0");
  return {g1.k * g2.k, g1.k * g2.kp + g1.kp / g2.k};
}

Poly taylor_in_t1(const Poly& f, int i) {
  const Poly shifted = f.substitute({{T1, Poly::var(T1) + Poly::var(X)}});
  return shifted.coeff_of(X, i);
}

}  // namespace qmf
