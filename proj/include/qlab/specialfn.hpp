#pragma once

#include <vector>

#include "qlab/complexhp.hpp"
#include "qlab/rational.hpp"

namespace qlab {

/// Exact Bernoulli number B_n (B_1 = -1/2 convention).
const Rat& bernoulli_number(long n);

/// Exact coefficients of the Bernoulli polynomial B_k(z), ascending powers.
std::vector<Rat> bernoulli_poly(long k);

/// Riemann zeta at rational s > 1 by Euler-Maclaurin summation.
/// On return *err_bound (if given) holds a bound on the absolute error.
Real zeta_real(const Rat& s, const PrecisionContext& ctx, Real* err_bound = nullptr);

/// zeta at integers <= 0, exactly: zeta(0) = -1/2, zeta(-m) = -B_{m+1}/(m+1).
Rat zeta_nonpositive(long m);

/// Integer polylogarithm Li_k(z), k >= 1, principal branch.
///
/// Regions: |z| <= 1/2 direct series; 1/2 < |z| < 2 expansion in log z;
/// |z| >= 2 inversion through Li_k(1/z) and a Bernoulli polynomial.
/// The point must stay off the cut [1, oo).
Complex li_int(long k, const Complex& z, const PrecisionContext& ctx);

/// Fractional polylogarithm Li_alpha(z) = sum z^n/n^alpha for |z| < 1,
/// by direct summation with a certified geometric tail bound.
Complex li_frac(const Rat& alpha, const Complex& z, const PrecisionContext& ctx);

/// A value together with the logarithm branch offsets it was computed with.
/// Principal branch means both offsets are zero.
struct BranchedValue {
    Complex value;
    long branch_log_z = 0;
    long branch_log_1mz = 0;
};

/// Rogers dilogarithm L(z) = Li2(z) + log(z)log(1-z)/2 - pi^2/6 for
/// z outside {0, 1}.  Nonzero offsets shift the two logarithms by
/// 2*pi*i*offset each (Li2 itself stays principal).
BranchedValue rogers(const Complex& z, const PrecisionContext& ctx,
                     long branch_log_z = 0, long branch_log_1mz = 0);

/// Certified limit values: L(z) -> 0 as z -> 1 and L(z) -> -pi^2/6 as z -> 0.
Real rogers_limit_at_one(const PrecisionContext& ctx);
Real rogers_limit_at_zero(const PrecisionContext& ctx);

} // namespace qlab
