#pragma once

#include <string>
#include <vector>

#include "qmf/series.hpp"
#include "qmf/theta.hpp"

namespace qmf {

/// 1728 E4^3 / (E4^3 - E6^2), starting at q^-1, valid through q^N.
QSeries j_function(long N);

/// tau(1..N) from (E4^3 - E6^2)/1728; entry 0 is tau(1).
std::vector<BigInt> tau(long N);
/// tau(1..N) from q prod (1-q^n)^24.
std::vector<BigInt> tau_via_eta(long N);

/// F_2 and F_3 of the degree-d covers of an elliptic curve as polynomials
/// in E2, E4, E6; coefficient of q^d is N_{g,d}.
QSeries dijkgraaf_F(int g, long N);

/// Positive-degree part of -E2/24 equals sum_d sigma_1(d) q^d, and the
/// constant term is -1/24.
SeriesIdentity F1_check(long N);

/// 1728 q / (E4^3 - E6^2)
QSeries yau_zaslow(long N);

/// (sum n sigma_1(n) q^(n-1))^g * yau_zaslow: the g-th power of -(1/24) D E2
/// with D = q d/dq, divided by q^g.
QSeries bryan_leung(int g, long N);
inline constexpr const char* kBryanLeungConvention =
    "derivative read as q d/dq, result divided by q^g";

/// eta(q)^2 eta(q^11)^2 = q prod (1-q^n)^2 (1-q^(11n))^2
QSeries modularity_eta_product(long N);

}  // namespace qmf
