#include "qmf/derham.hpp"

#include "qmf/linsolve.hpp"

namespace qmf {

std::string CohomClass::str() const { return "alpha = " + alpha.str() + "\nbeta = " + beta.str(); }

const Poly& CurveFamily::P() {
  static const Poly p = Poly::parse("4*(x - t1)^3 - t2*(x - t1) - t3");
  return p;
}

const Poly& CurveFamily::dP() {
  static const Poly p = P().diff(X);
  return p;
}

const Poly& CurveFamily::delta() {
  static const Poly d = Poly::parse("27*t3^2 - t2^3");
  return d;
}

Poly exact_generator(int a) {
  Poly g = CurveFamily::dP() * Poly::var(X, a) * Rational(1, 2);
  if (a > 0) g += CurveFamily::P() * Poly::var(X, a - 1) * Rational(a);
  return g;
}

CohomClass reduce(const Poly& C) {
  Poly c = C;
  for (int n = c.degree(X); n >= 2; n = c.degree(X)) {
    const int a = n - 2;
    // leading x-coefficient of the generator is 6 + 4a
    const Poly lead = c.coeff_of(X, n);
    c -= lead * exact_generator(a) * Rational(1, 6 + 4 * a);
  }
  return {Fraction(c.coeff_of(X, 0)), Fraction(c.coeff_of(X, 1))};
}

Cofactors cofactors() {
  // unknowns: u0..u4 (a1 = sum u_k x^k), lambda, mu (a2 = lambda P + mu)
  const Poly& P = CurveFamily::P();
  const Poly& dP = CurveFamily::dP();
  std::vector<Poly> cols;
  for (int k = 0; k <= 4; ++k) cols.push_back(-(dP * Poly::var(X, k)));
  cols.push_back(P * P);
  cols.push_back(P);
  const int rows = 7;
  std::vector<std::vector<Poly>> A(rows, std::vector<Poly>(cols.size()));
  std::vector<Poly> b(rows);
  for (int r = 0; r < rows; ++r) {
    for (std::size_t j = 0; j < cols.size(); ++j) A[static_cast<std::size_t>(r)][j] = cols[j].coeff_of(X, r);
    b[static_cast<std::size_t>(r)] = r == 0 ? CurveFamily::delta() : Poly();
  }
  const SolveResult<Poly> res = solve_fraction_free(std::move(A), std::move(b));
  if (res.status != SolveStatus::Unique) throw SolveFailure("cofactor system is not uniquely solvable");
  std::vector<Poly> u;
  for (const Poly& n : res.numer) {
    auto q = n.divide_exact(res.denom);
    if (!q) throw SolveFailure("cofactor is not polynomial in the parameters");
    u.push_back(*q);
  }
  Cofactors cf;
  for (int k = 0; k <= 4; ++k) cf.a1 += u[static_cast<std::size_t>(k)] * Poly::var(X, k);
  cf.a2 = u[5] * P + u[6];
  if (!(-(dP * cf.a1) + P * cf.a2 == CurveFamily::delta())) throw SolveFailure("cofactor identity check failed");
  return cf;
}

}  // namespace qmf
