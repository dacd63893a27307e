#pragma once

#include <functional>

#include "qlab/complexhp.hpp"

namespace qlab {

/// Adaptive tanh-sinh quadrature of f over the finite interval [a, b].
/// The level is doubled until two successive refinements agree to tol (in the
/// max norm of both components); non-convergence raises ConvergenceError with
/// the interval in the message.
Complex tanh_sinh(const std::function<Complex(const Real&)>& f, const Real& a, const Real& b,
                  const PrecisionContext& ctx, const Real& tol, Real* achieved = nullptr);

} // namespace qlab
