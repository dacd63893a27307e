#pragma once

#include "qlab/complexhp.hpp"
#include "qlab/rational.hpp"

namespace qlab {

/// Z_{S^3,SU(2),n} = sqrt(2/(n+2)) sin(pi/(n+2)).
Real wrt_s3(long n, const PrecisionContext& ctx);

/// Closed form of L^np_{S^3}(z) through fractional polylogarithms, truncated
/// at k = K:
///
///   sqrt(2)/z^2 * sum_{k=0..K} pi^{2k+1}(-1)^k/(2k+1)! (Li_{2k+3/2}(z) - z)
///
/// The per-term subtraction keeps each summand analytic at z = 0; summed over
/// all k it reproduces the generating series exactly.  On return *tail_bound
/// (if given) holds a bound on the k-truncation error.
Complex lnp_s3_polylog(const Complex& z, long K, const PrecisionContext& ctx,
                       Real* tail_bound = nullptr);

/// Verlinde formula: Z_{S^1 x Sigma_g, SU(2), n} as an exact integer-valued
/// rational.  g <= 1 is summed in closed form; g >= 2 is evaluated in
/// floating point and rounded with a certificate.
Rat verlinde_sum(long g, long n);

/// Residue formula for the same invariant, g >= 2, via exact Laurent
/// expansion of cot and 1/sin^{2g-2}.
Rat verlinde_residue(long g, long n);

} // namespace qlab
