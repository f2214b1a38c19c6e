#pragma once

#include <string>

#include "dmf/tseries.hpp"

namespace dmf {

/// Symbolic text rendering: T-polynomials with balanced signs (2 over F_3
/// prints as -1), generators as g'_i and the Delta-prime glyph, ascending
/// t-powers, trailing O(t^prec).  Output is canonical and byte-stable.
std::string poly_to_text(const FieldSpec& F, const Poly& p);
std::string rat_to_text(const FieldSpec& F, const Rat& c);
std::string coeff_to_text(const CoefficientElement& c);
std::string series_to_text(const TruncatedSeries& f);
std::string series_to_text(const std::string& label, const TruncatedSeries& f);

}  // namespace dmf
