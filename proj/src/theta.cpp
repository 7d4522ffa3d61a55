#include "qmf/theta.hpp"

#include <cmath>

#include "qmf/eisenstein.hpp"

namespace qmf {

namespace {

// truncate to q^N whatever the lattice
template <class S>
PuiseuxSeries<S> upto(const PuiseuxSeries<S>& s, long N) {
  return s.truncate(N * s.d());
}

// coefficients of f placed on lattice 3 with q^k -> w^k q^(k/3)
CSeries third_root_substitution(const QSeries& f, const Cyclo& w) {
  CSeries r(3, 0, f.N(), {});
  Cyclo wk(1);
  for (long k = 0; k <= f.N(); ++k) {
    r.at(k) = Cyclo(f.coeff(k)) * wk;
    wk = wk * w;
  }
  return r;
}

CSeries to_cyclo(const QSeries& f) {
  CSeries r(f.d(), f.k0(), f.N(), {});
  for (long k = f.k0(); k <= f.N(); ++k) r.at(k) = Cyclo(f.coeff(k));
  return r;
}

}  // namespace

QSeries theta_constant(int which, long N) {
  if (which < 2 || which > 4) throw Error("theta_constant: which must be 2, 3 or 4");
  if (N < 0) throw TruncationError("theta_constant needs N >= 0");
  if (which == 2) {
    // exponent (2n+1)^2/8, each odd m counted for n and -n-1
    QSeries s(8, 0, 8 * N, {});
    for (long m = 1; m * m <= 8 * N; m += 2) s.at(m * m) = Rational(2);
    return s;
  }
  QSeries s(2, 0, 2 * N, {});
  s.at(0) = Rational(1);
  for (long n = 1; n * n <= 2 * N; ++n) s.at(n * n) = Rational(which == 4 && n % 2 == 1 ? -2 : 2);
  return s;
}

QSeries euler_product(long N) {
  if (N < 0) throw TruncationError("euler_product needs N >= 0");
  std::vector<Rational> c(static_cast<std::size_t>(N + 1));
  c[0] = Rational(1);
  for (long n = 1; n <= N; ++n) {
    for (long k = N; k >= n; --k) c[static_cast<std::size_t>(k)] -= c[static_cast<std::size_t>(k - n)];
  }
  return QSeries::from_coeffs(std::move(c));
}

QSeries dedekind_eta(long N) {
  const QSeries P = euler_product(N);
  QSeries s(24, 1, std::max(1L, 24 * N), {});
  for (long k = 0; 24 * k + 1 <= s.N(); ++k) s.at(24 * k + 1) = P.coeff(k);
  return s;
}

HalphenTriple halphen_solution(long N) {
  if (N < 0) throw TruncationError("halphen_solution needs N >= 0");
  const Rational two(2);
  return {upto(log_derivative(theta_constant(4, N + 1)) * two, N), upto(log_derivative(theta_constant(2, N + 1)) * two, N),
          upto(log_derivative(theta_constant(3, N + 1)) * two, N)};
}

std::array<QSeries, 3> halphen_residual(const HalphenTriple& u) {
  return {derive(u.u1) - (u.u1 * (u.u2 + u.u3) - u.u2 * u.u3),
          derive(u.u2) - (u.u2 * (u.u1 + u.u3) - u.u1 * u.u3),
          derive(u.u3) - (u.u3 * (u.u1 + u.u2) - u.u1 * u.u2)};
}

QSeries darboux_residual(const HalphenTriple& u) { return derive(u.u1 + u.u2) - Rational(2) * u.u1 * u.u2; }

SeriesIdentity make_identity(std::string name, QSeries lhs, QSeries rhs) {
  SeriesIdentity r{std::move(name), std::move(lhs), std::move(rhs), std::nullopt};
  r.first_difference = first_difference(r.lhs, r.rhs);
  return r;
}

std::string SeriesIdentity::str() const {
  if (holds()) return name + ": ok";
  const Rational e = *first_difference;
  const long p = e.num().get_si(), q = e.den().get_si();
  return name + ": differs at q^" + e.str() + ": lhs=" + lhs.coeff_at(p, q).str() + " rhs=" + rhs.coeff_at(p, q).str();
}

std::vector<SeriesIdentity> theta_eisenstein_identities(long N) {
  if (N < 0) throw TruncationError("theta_eisenstein_identities needs N >= 0");
  const HalphenTriple u = halphen_solution(N);
  const Rational half(1, 2), third(1, 3);
  // D ln theta_i for i = 2, 3, 4
  const std::array<QSeries, 3> dl = {u.u2 * half, u.u3 * half, u.u1 * half};
  const QSeries sum = dl[0] + dl[1] + dl[2];
  std::array<QSeries, 3> L;
  for (std::size_t i = 0; i < 3; ++i) L[i] = sum * third - dl[i];

  std::vector<SeriesIdentity> out;
  out.push_back(make_identity("(2/3) D ln(theta2 theta3 theta4) = E2/12", upto(sum * Rational(2, 3), N),
                              eisenstein_divisor(1, N) * Rational(1, 12)));
  out.push_back(make_identity("-16 sum L_i L_j = E4/12", upto((L[0] * L[1] + L[0] * L[2] + L[1] * L[2]) * Rational(-16), N),
                              eisenstein_divisor(2, N) * Rational(1, 12)));
  out.push_back(make_identity("-32 L_2 L_3 L_4 = E6/216", upto(L[0] * L[1] * L[2] * Rational(-32), N),
                              eisenstein_divisor(3, N) * Rational(1, 216)));
  return out;
}

SeriesIdentity delta_product_report(long N) {
  if (N < 1) throw TruncationError("delta_product_check needs N >= 1");
  const QSeries E4 = eisenstein_divisor(2, N), E6 = eisenstein_divisor(3, N);
  const QSeries lhs = (pow(E4, 3) - E6 * E6) * Rational(1, 1728);
  const QSeries rhs = pow(euler_product(N - 1), 24).shift(1);
  return make_identity("(E4^3 - E6^2)/1728 = q prod (1-q^n)^24", lhs, rhs);
}

bool delta_product_check(long N) { return delta_product_report(N).holds(); }

bool OhyamaEtaReport::holds() const {
  for (const CSeries& r : residuals) {
    if (!r.is_known_zero()) return false;
  }
  return true;
}

OhyamaEtaReport ohyama_eta_series(long N) {
  if (N < 1) throw TruncationError("ohyama_eta_series needs N >= 1");
  const QSeries P = euler_product(N + 1);
  const Cyclo z = Cyclo::zeta(3);
  const Cyclo z2 = z * z;
  const CSeries base = to_cyclo(log_derivative(P));
  const Cyclo three(3);

  // 3 D log eta(.) - D log eta(z); the q^(1/24) prefactors contribute constants
  const auto quotient = [&](const CSeries& dlog_prod, const Rational& constant) {
    return upto(dlog_prod * three - base + Cyclo(constant), N);
  };
  OhyamaEtaReport r;
  r.t[0] = quotient(log_derivative(third_root_substitution(P, Cyclo(1))), Rational(0));
  r.t[1] = quotient(to_cyclo(log_derivative(dilate(P, 3))), Rational(1, 3));
  r.t[2] = quotient(log_derivative(third_root_substitution(P, z2)), Rational(0));
  r.t[3] = quotient(log_derivative(third_root_substitution(P, z)), Rational(0));

  const auto& t = r.t;
  const auto D = [](const CSeries& s) { return derive(s); };
  r.residuals[0] = D(t[0]) + D(t[1]) + D(t[2]) - (t[0] * t[1] + t[1] * t[2] + t[2] * t[0]);
  r.residuals[1] = D(t[0]) + D(t[2]) + D(t[3]) - (t[0] * t[2] + t[2] * t[3] + t[3] * t[0]);
  r.residuals[2] = D(t[0]) + D(t[1]) + D(t[3]) - (t[0] * t[1] + t[1] * t[3] + t[3] * t[0]);
  r.residuals[3] = D(t[1]) + D(t[2]) + D(t[3]) - (t[1] * t[2] + t[2] * t[3] + t[3] * t[1]);
  r.residuals[4] = (t[1] * t[3] + t[2] * t[0]) * z2 + (t[1] * t[0] + t[2] * t[3]) * z + (t[1] * t[2] + t[3] * t[0]);
  return r;
}

}  // namespace qmf
