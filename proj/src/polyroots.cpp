#include "qlab/polyroots.hpp"

#include "qlab/errors.hpp"

namespace qlab {

std::vector<Complex> poly_roots(const std::vector<Complex>& coeffs_in, const PrecisionContext& ctx) {
    long wp = ctx.work_bits();
    Real tiny = exp(Real(-(double)wp * 0.6931471805599453, wp));

    std::vector<Complex> c = coeffs_in;
    while (!c.empty() && abs(c.back()) < tiny) c.pop_back();
    if (c.size() <= 1) return {};

    std::vector<Complex> roots;
    size_t lead_zero = 0;
    while (lead_zero < c.size() - 1 && abs(c[lead_zero]) < tiny) ++lead_zero;
    for (size_t i = 0; i < lead_zero; ++i) roots.emplace_back(wp);
    if (lead_zero) c.erase(c.begin(), c.begin() + (long)lead_zero);

    size_t deg = c.size() - 1;
    if (deg == 0) return roots;

    // monic normalization
    for (size_t i = 0; i < deg; ++i) c[i] = c[i] / c[deg];
    c[deg] = Complex(Real(1l, wp));

    // Cauchy-style radius: 1 + max |c_i|
    Real radius(1l, wp);
    for (size_t i = 0; i < deg; ++i) {
        Real a = abs(c[i]);
        if (a > radius) radius = a;
    }
    radius = radius + 1l;

    std::vector<Complex> z(deg, Complex(wp));
    {
        Complex seed(0.4, 0.9, wp);
        Complex p(Real(1l, wp));
        for (size_t i = 0; i < deg; ++i) {
            p = p * seed;
            z[i] = p * radius;
        }
    }

    auto eval = [&](const Complex& x) {
        Complex acc = c[deg];
        for (size_t i = deg; i-- > 0;) acc = acc * x + c[i];
        return acc;
    };

    Real tol = exp(Real(-(double)(ctx.bits - 8) * 0.6931471805599453, wp));
    const int max_iter = 500;
    for (int it = 0; it < max_iter; ++it) {
        Real worst(0.0, wp);
        for (size_t i = 0; i < deg; ++i) {
            Complex num = eval(z[i]);
            Complex den(Real(1l, wp));
            for (size_t j = 0; j < deg; ++j)
                if (j != i) den = den * (z[i] - z[j]);
            Complex delta = num / den;
            z[i] -= delta;
            Real d = abs(delta);
            if (d > worst) worst = d;
        }
        if (worst < tol * radius) {
            for (auto& r : z) roots.push_back(r);
            return roots;
        }
    }
    Real res(0.0, wp);
    for (auto& x : z) {
        Real v = abs(eval(x));
        if (v > res) res = v;
    }
    throw ConvergenceError("poly_roots: Durand-Kerner stalled after 500 iterations; worst residual " +
                           res.str(6));
}

} // namespace qlab
