#include "qlab/candidates.hpp"

#include <algorithm>

#include "qlab/polyroots.hpp"
#include "qlab/specialfn.hpp"

namespace qlab {

namespace {

void push_unique(std::vector<Complex>& v, const Complex& z, const Real& tol) {
    for (const auto& w : v)
        if (abs(w - z) < tol) return;
    v.push_back(z);
}

} // namespace

CandidateSet singular_candidates(const SumProductSpec& s, long branches,
                                 const PrecisionContext& ctx) {
    s.validate();
    long wp = ctx.work_bits();
    Real tol = exp(Real(-(double)(ctx.bits / 2) * 0.6931471805599453, wp));
    CandidateSet out;

    // phi(q) = 1 after clearing the q^c power:
    // eps q^{c+t} prod_r (1-q^r)^{c_r} - q^t = 0 with t = max(0, -c)
    {
        long t = std::max(0l, -s.c);
        LaurentPoly E = s.phi_poly().shifted(t) - LaurentPoly::monomial(1, t);
        std::vector<Complex> coeffs((size_t)E.max_exp() + 1, Complex(wp));
        E.for_each([&](long e, const Int& c) { coeffs[(size_t)e].re = Real(c, wp); });
        for (auto& r : poly_roots(coeffs, ctx)) push_unique(out.roots, r, tol);
    }
    // phi(q) = 0: the r-th roots of unity for every factor, and 0 when c > 0
    for (auto& [r, cr] : s.c_r) {
        if (cr == 0) continue;
        for (long j = 0; j < r; ++j) push_unique(out.roots, root_of_unity(j, r, wp), tol);
    }
    if (s.c > 0) push_unique(out.roots, Complex(wp), tol);

    Real pi = const_pi(wp);
    Real period = 4l * pi * pi;
    Complex two_pi_i(Real(0.0, wp), 2l * pi);
    long kmax = std::max(1l, branches);

    for (const auto& q : out.roots) {
        Complex L(wp);
        Complex one(Real(1l, wp));
        if (abs(q) < tol) L.re = rogers_limit_at_zero(ctx);
        else if (abs(q - one) < tol) L.re = rogers_limit_at_one(ctx);
        else L = rogers(q, ctx).value;
        for (long k = -kmax; k <= kmax; ++k) {
            if (k == 0) continue;
            Complex lam = Real((long)k, wp) * L;
            Real shift = roundr(lam.re / period);
            lam.re -= shift * period;
            push_unique(out.lambda_values, lam, tol);
        }
    }

    Complex zero(wp), one(Real(1l, wp));
    out.elambda.push_back(zero);
    out.elambda.push_back(one);
    for (const auto& lam : out.lambda_values)
        push_unique(out.elambda, exp(lam / two_pi_i), tol);
    return out;
}

Real vol_41(const PrecisionContext& ctx) {
    long wp = ctx.work_bits();
    Complex z = root_of_unity(1, 6, wp);
    // -i Li2(z) + i Li2(conj z) = 2 Im Li2(z)
    return 2l * li_int(2, z, ctx).im;
}

} // namespace qlab
