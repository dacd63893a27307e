#pragma once

#include <vector>

#include "qlab/habiro.hpp"

namespace qlab {

/// Heuristic singularity candidates built from the roots of phi = 1 and
/// phi = 0 through the Rogers dilogarithm.
///
/// lambda_values holds integer multiples k*L(root), 1 <= |k| <= max(1, branches),
/// with real parts reduced modulo 4*pi^2; elambda holds exp(lambda/(2*pi*i))
/// together with the fixed members 0 and 1.
struct CandidateSet {
    std::vector<Complex> roots;
    std::vector<Complex> lambda_values;
    std::vector<Complex> elambda;
    bool heuristic = true;
};

CandidateSet singular_candidates(const SumProductSpec& s, long branches,
                                 const PrecisionContext& ctx);

/// Vol(4_1) = -i Li2(exp(2 pi i/6)) + i Li2(exp(-2 pi i/6)).
Real vol_41(const PrecisionContext& ctx);

} // namespace qlab
