#pragma once

#include <vector>

#include "qlab/complexhp.hpp"

namespace qlab {

/// All complex roots of sum_k coeffs[k] z^k (ascending coefficients) by the
/// Durand-Kerner iteration at ctx precision.  Leading/trailing zero
/// coefficients are stripped; zero roots are returned explicitly.
/// Throws ConvergenceError with the worst residual when the iteration stalls.
std::vector<Complex> poly_roots(const std::vector<Complex>& coeffs, const PrecisionContext& ctx);

} // namespace qlab
