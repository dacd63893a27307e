#include "qlab/wrt.hpp"

#include "qlab/errors.hpp"
#include "qlab/specialfn.hpp"

namespace qlab {

Real wrt_s3(long n, const PrecisionContext& ctx) {
    if (n < 0) throw DomainError("wrt_s3: n must be >= 0");
    long wp = ctx.work_bits();
    Real m(n + 2, wp);
    return sqrt(Real(2l, wp) / m) * sin(const_pi(wp) / m);
}

Complex lnp_s3_polylog(const Complex& z, long K, const PrecisionContext& ctx, Real* tail_bound) {
    if (K < 1) throw DomainError("lnp_s3_polylog: K must be >= 1");
    if (z.is_zero()) throw DomainError("lnp_s3_polylog: z = 0 (1/z^2 prefactor)");
    long wp = ctx.work_bits();
    if (!(abs(z) < Real(1l, wp))) throw DomainError("lnp_s3_polylog: need |z| < 1");

    Real pi = const_pi(wp);
    Complex sum(wp);
    Real coef = pi; // pi^{2k+1}/(2k+1)!
    for (long k = 0; k <= K; ++k) {
        Complex li = li_frac(Rat(4 * k + 3, 2), z, ctx);
        Complex term = (li - z) * coef;
        if (k % 2 == 0) sum += term;
        else sum -= term;
        coef = coef * pi * pi / Real((2 * k + 2) * (2 * k + 3), wp);
    }
    Real s2 = sqrt(Real(2l, wp));
    Complex pref = Complex(s2) / (z * z);
    if (tail_bound) {
        // next coefficient times (|Li| + |z|), with |Li_{2K+7/2}(|z|)| <= Li at |z|
        Real az = abs(z);
        Real libound = abs(li_frac(Rat(4 * K + 7, 2), Complex(az), ctx));
        *tail_bound = coef * (libound + az) * s2 / (az * az);
    }
    return pref * sum;
}

Rat verlinde_sum(long g, long n) {
    if (g < 0) throw DomainError("verlinde_sum: g must be >= 0");
    if (n < 0) throw DomainError("verlinde_sum: n must be >= 0");
    if (g == 0) return Rat(1);
    if (g == 1) return Rat(n + 1);

    for (long bits = 256;; bits *= 2) {
        long wp = bits;
        Real pi = const_pi(wp);
        Real m(n + 2, wp);
        Real sum(0.0, wp);
        for (long j = 1; j <= n + 1; ++j) {
            Real s = sin(pi * Real(j, wp) / m);
            Real base = m / (2l * s * s);
            sum += pow(base, g - 1);
        }
        Real err(wp);
        Int z = round_to_int(sum, &err);
        // rounding certificate: the computed sum must sit within 2^-40 of an integer
        Real cert = exp(Real(-40.0 * 0.6931471805599453, wp));
        if (err < cert) return Rat(z);
        if (bits > 1l << 14)
            throw ConvergenceError("verlinde_sum: rounding certificate failed at g=" +
                                   std::to_string(g) + ", n=" + std::to_string(n));
    }
}

namespace {

// product of two even truncated series (coefficients of x^0, x^2, ..., x^{2m})
std::vector<Rat> even_mul(const std::vector<Rat>& a, const std::vector<Rat>& b, size_t m) {
    std::vector<Rat> r(m + 1, Rat(0));
    for (size_t i = 0; i <= m && i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; i + j <= m && j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

} // namespace

Rat verlinde_residue(long g, long n) {
    if (g < 2) throw DomainError("verlinde_residue: formula is stated for g >= 2");
    if (n < 0) throw DomainError("verlinde_residue: n must be >= 0");
    const size_t m = (size_t)(g - 1); // need even orders up to x^{2g-2}

    // A(x): (n+2) cot((n+2)x) = (1/x) sum_k (-4)^k B_{2k} ((n+2)x)^{2k}/(2k)!
    std::vector<Rat> A(m + 1, Rat(0));
    {
        Rat w((n + 2) * (n + 2));
        Rat pw(1), f4(1);
        for (size_t k = 0; k <= m; ++k) {
            A[k] = f4 * bernoulli_number(2 * (long)k) * pw / Rat(factorial(2 * (long)k));
            pw *= w;
            f4 *= -4;
        }
    }
    // S(x) = sin(x)/x as an even series
    std::vector<Rat> S(m + 1, Rat(0));
    {
        Rat sgn(1);
        for (size_t k = 0; k <= m; ++k) {
            S[k] = sgn / Rat(factorial(2 * (long)k + 1));
            sgn = -sgn;
        }
    }
    // I = 1/S, then T = I^{2g-2}
    std::vector<Rat> I(m + 1, Rat(0));
    I[0] = 1;
    for (size_t k = 1; k <= m; ++k) {
        Rat s(0);
        for (size_t j = 1; j <= k; ++j) s += S[j] * I[k - j];
        I[k] = -s; // S[0] == 1
    }
    std::vector<Rat> T(m + 1, Rat(0));
    T[0] = 1;
    for (long e = 0; e < 2 * g - 2; ++e) T = even_mul(T, I, m);

    std::vector<Rat> P = even_mul(A, T, m);
    // residue = 2^{2-2g} * [x^{2g-2}] A*T;  result = -(2(n+2))^{g-1} * residue.
    // The prefactor uses 2(n+2), which is what the contour argument produces
    // and what matches the Verlinde sum exactly.
    Rat res = P[m];
    for (long e = 0; e < 2 * g - 2; ++e) res /= 2;
    Rat out = -res;
    Rat base(2 * (n + 2));
    for (long e = 0; e < g - 1; ++e) out *= base;
    return out;
}

} // namespace qlab
