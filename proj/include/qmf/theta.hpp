#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qmf/cyclo.hpp"
#include "qmf/series.hpp"

namespace qmf {

/// theta_2 (lattice 8), theta_3, theta_4 (lattice 2), summed over every n
/// whose exponent is at most N. which is 2, 3 or 4.
QSeries theta_constant(int which, long N);

/// prod_{n >= 1} (1 - q^n) through q^N.
QSeries euler_product(long N);

/// q^(1/24) prod (1 - q^n) on lattice 24, valid through q^N.
QSeries dedekind_eta(long N);

/// u~_i = 2 D(theta)/theta with D = q d/dq, for (theta_4, theta_2, theta_3).
/// u~_2 lives on the integer lattice, the other two on q^(1/2).
struct HalphenTriple {
  QSeries u1, u2, u3;
};
HalphenTriple halphen_solution(long N);

/// D u_1 - (u_1(u_2+u_3) - u_2 u_3) and its cyclic companions.
std::array<QSeries, 3> halphen_residual(const HalphenTriple& u);

/// D(u_1 + u_2) - 2 u_1 u_2
QSeries darboux_residual(const HalphenTriple& u);

struct SeriesIdentity {
  std::string name;
  QSeries lhs, rhs;
  /// first exponent where lhs and rhs differ, if any
  std::optional<Rational> first_difference;
  [[nodiscard]] bool holds() const { return !first_difference.has_value(); }
  /// "name: ok" or "name: differs at q^e: lhs=.. rhs=.."
  [[nodiscard]] std::string str() const;
};
SeriesIdentity make_identity(std::string name, QSeries lhs, QSeries rhs);

/// With L_i = (1/3) sum_j D ln theta_j - D ln theta_i:
///   (2/3) D ln(theta_2 theta_3 theta_4) = E2/12
///   -16 sum_{i<j} L_i L_j              = E4/12
///   -32 L_2 L_3 L_4                    = E6/216
/// The 2 pi i factors are absorbed: a_k = (1, 12, 8) (2 pi i/12)^k become
/// (1/12, 1/12, 1/216) on the E_k side.
std::vector<SeriesIdentity> theta_eisenstein_identities(long N);

/// (E4^3 - E6^2)/1728 against q prod (1-q^n)^24, both through q^N.
SeriesIdentity delta_product_report(long N);
bool delta_product_check(long N);

using CSeries = PuiseuxSeries<Cyclo>;

/// Normalized logarithmic derivatives of eta quotients
///   W = 3 D log eta(z/3) - D log eta(z),  X = same with eta(3z),
///   Y = same with eta((z+2)/3),           Z = same with eta((z+1)/3)
/// on lattice 3 over Q(zeta_3), and the residuals of the four sum equations
/// and of F(W, X, Y, Z).
struct OhyamaEtaReport {
  std::array<CSeries, 4> t;
  std::array<CSeries, 5> residuals;
  [[nodiscard]] bool holds() const;
};
OhyamaEtaReport ohyama_eta_series(long N);

}  // namespace qmf
