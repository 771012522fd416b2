#pragma once

#include <string>

#include "sdc/laurent.hpp"

namespace sdc {

/// Machine rendering of a series: `offset=<o> coeffs=<c0,c1,...> trunc=<n>`.
std::string machine_series(const LaurentPolyZ& s);

/// Comma-joined coefficient list over [offset, trunc].
std::string coeff_list(const LaurentPolyZ& s);

} // namespace sdc
