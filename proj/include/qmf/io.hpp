#pragma once

#include <string>
#include <string_view>

#include "qmf/series.hpp"

namespace qmf {

/// One line: {"d": 8, "k0": 1, "N": 25, "coeffs": ["2", "0", ...]} with
/// coefficients of q^(k0/d) .. q^(N/d) as rational strings.
std::string to_json(const QSeries& s);
/// Inverse of to_json. Throws ParseError on malformed input.
QSeries series_from_json(std::string_view text);

/// "1 - 24*q - 72*q^2", "2*q^(1/8) + 2*q^(9/8)", "q^(-1) + 744"; "0" when
/// no coefficient is nonzero.
std::string pretty(const QSeries& s);

}  // namespace qmf
