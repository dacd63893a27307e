#include "qlab/quadrature.hpp"

#include <cmath>

#include "qlab/errors.hpp"

namespace qlab {

Complex tanh_sinh(const std::function<Complex(const Real&)>& f, const Real& a, const Real& b,
                  const PrecisionContext& ctx, const Real& tol, Real* achieved) {
    long wp = ctx.work_bits();
    Real mid = (a + b) / 2l, half = (b - a) / 2l;
    Real pi_half = const_pi(wp) / 2l;
    double T = std::log(2.0 * ((double)wp * 0.6932) / 1.5707) + 1.0;

    auto level_sum = [&](double h, bool odd_only, Complex& acc) {
        long kmax = (long)std::ceil(T / h);
        for (long k = -kmax; k <= kmax; ++k) {
            if (odd_only && (k % 2 == 0)) continue;
            Real t(h * (double)k, wp);
            Real sh = pi_half * (exp(t) - exp(-t)) / 2l;   // (pi/2) sinh t
            Real ch = pi_half * (exp(t) + exp(-t)) / 2l;   // (pi/2) cosh t
            Real esh = exp(sh), iesh = 1l / esh;
            Real th = (esh - iesh) / (esh + iesh);          // tanh((pi/2) sinh t)
            Real sech = 2l / (esh + iesh);
            Real w = ch * sech * sech;
            if (w.to_double() == 0.0) continue;
            acc += f(mid + half * th) * w;
        }
    };

    Complex prev(wp);
    double h = 1.0;
    Complex acc(wp);
    level_sum(h, false, acc);
    Complex integral = acc * Real(h, wp) * half;
    for (int level = 1; level <= 12; ++level) {
        h /= 2.0;
        level_sum(h, true, acc);
        Complex next = acc * Real(h, wp) * half;
        Real diff = abs(next - integral);
        prev = integral;
        integral = next;
        if (level >= 3 && diff < tol) {
            if (achieved) *achieved = diff;
            return integral;
        }
    }
    throw ConvergenceError("tanh_sinh: no convergence on [" + a.str(6) + ", " + b.str(6) +
                           "] after 12 refinement levels; last delta " +
                           abs(integral - prev).str(6));
}

} // namespace qlab
