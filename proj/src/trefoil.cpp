#include "qlab/trefoil.hpp"

#include "qlab/errors.hpp"
#include "qlab/quadrature.hpp"
#include "qlab/sumprod.hpp"

namespace qlab {

Complex trefoil_borel_kernel(const Real& p, long terms, const PrecisionContext& ctx) {
    long wp = ctx.work_bits();
    static const Character12 chi;
    Real pi = const_pi(wp);
    Real pi2_6 = pi * pi / 6l;
    Real mfive_half(-2.5, wp);
    Complex sum(wp);
    for (long m = 1; m <= terms; ++m) {
        int c = chi(m);
        if (!c) continue;
        Complex base(pi2_6 * Real(m * m, wp), 2l * pi * p);
        Complex t = pow(base, mfive_half) * Real(m, wp);
        if (c > 0) sum += t;
        else sum -= t;
    }
    // prefactor -(3 sqrt(2) pi^2 / 2) i
    Real pref = 3l * sqrt(Real(2l, wp)) * pi * pi / 2l;
    return Complex(sum.im * pref, -sum.re * pref);
}

TrefoilDecomposition trefoil_decomposition_check(long n, long terms, const PrecisionContext& ctx) {
    if (n < 1) throw DomainError("trefoil_decomposition_check: n must be >= 1");
    if (terms < 1) throw DomainError("trefoil_decomposition_check: terms must be >= 1");
    long wp = ctx.work_bits();
    TrefoilDecomposition out;
    out.kashaev = habiro_eval(kashaev_31(), n, ctx);

    Real pi = const_pi(wp);
    // Laplace integral, substituted u = n p so the kernel varies on unit scale
    Real U((double)(wp) * 0.6931471805599453 + 30.0, wp);
    Real qtol = exp(Real(-(double)(ctx.bits - 24) * 0.6931471805599453, wp));
    Real nr(n, wp);
    auto integrand = [&](const Real& u) {
        return exp(Real(-u)) * trefoil_borel_kernel(u / nr, terms, ctx);
    };
    Real achieved(0.0, wp);
    Complex I = tanh_sinh(integrand, Real(0.0, wp), U, ctx, qtol, &achieved) / nr;
    out.quadrature_error = achieved;

    // zeta_24^{3-n} n^{3/2}, with the eta-weight e^{-i pi/(12 n)}
    Real theta = pi * Real(3 - n, wp) / 12l;
    Complex zf(cos(theta), sin(theta));
    Real n32 = pow(nr, Real(1.5, wp));
    Real phase_arg = -pi / (12l * nr);
    Complex ph(cos(phase_arg), sin(phase_arg));

    Complex inner = zf * n32 + I;
    inner.re += Real(1l, wp);
    out.reconstructed = ph * inner;
    out.relative_residual = abs(out.kashaev - out.reconstructed) / abs(out.kashaev);
    return out;
}

} // namespace qlab
