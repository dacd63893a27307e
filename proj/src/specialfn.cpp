#include "qlab/specialfn.hpp"

#include <cmath>
#include <mutex>

#include "qlab/errors.hpp"

namespace qlab {

namespace {

Int binom_int(long n, long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), (unsigned long)n, (unsigned long)k);
    return r;
}

Real rat_to_real(const Rat& q, long prec) { return Real(q, prec); }

} // namespace

const Rat& bernoulli_number(long n) {
    if (n < 0) throw DomainError("bernoulli_number: n must be >= 0");
    static std::vector<Rat> cache{Rat(1)};
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    // sum_{j=0}^{m} C(m+1, j) B_j = 0  for m >= 1
    while ((long)cache.size() <= n) {
        long m = (long)cache.size();
        Rat s(0);
        for (long j = 0; j < m; ++j) s += Rat(binom_int(m + 1, j)) * cache[(size_t)j];
        cache.push_back(-s / Rat(m + 1));
    }
    return cache[(size_t)n];
}

std::vector<Rat> bernoulli_poly(long k) {
    if (k < 0) throw DomainError("bernoulli_poly: k must be >= 0");
    std::vector<Rat> c((size_t)k + 1, Rat(0));
    for (long j = 0; j <= k; ++j)
        c[(size_t)(k - j)] = Rat(binom_int(k, j)) * bernoulli_number(j);
    return c;
}

Rat zeta_nonpositive(long m) {
    if (m > 0) throw DomainError("zeta_nonpositive: argument must be <= 0 as -m");
    if (m == 0) return Rat(-1, 2);
    return -bernoulli_number(-m + 1) / Rat(-m + 1);
}

Real zeta_real(const Rat& s, const PrecisionContext& ctx, Real* err_bound) {
    if (s <= 1) throw DomainError("zeta_real: s must be > 1");
    long wp = ctx.work_bits() + 32;
    Real sr = rat_to_real(s, wp);
    const long N = std::max<long>(32, wp / 4);

    Real sum(0.0, wp);
    for (long n = 1; n < N; ++n) sum += exp(-sr * log(Real((long)n, wp)));

    Real Nr((long)N, wp);
    Real logN = log(Nr);
    Real Npow = exp(-sr * logN); // N^{-s}
    sum += Npow * Nr / (sr - 1l); // N^{1-s}/(s-1)
    sum += Npow / 2l;

    // Euler-Maclaurin correction terms with the first-omitted-term bound
    Real poch = sr;                  // (s)_{2j-1}
    Real Nfac = Npow / Nr;           // N^{-s-2j+1}
    Real tolerance = exp(Real(-(double)(ctx.work_bits() + 8) * 0.6931471805599453, wp));
    Real bound(0.0, wp);
    for (long j = 1; j <= 400; ++j) {
        Real term = rat_to_real(bernoulli_number(2 * j), wp) / Real(factorial(2 * j), wp);
        term = term * poch * Nfac;
        Real mag = abs(term);
        if (mag < tolerance) {
            bound = 2l * mag;
            break;
        }
        sum += term;
        poch = poch * (sr + (2 * j - 1)) * (sr + (2 * j));
        Nfac = Nfac / (Nr * Nr);
        bound = 2l * mag;
    }
    if (err_bound) *err_bound = bound;
    return sum;
}

namespace {

Complex li_direct(long k, const Complex& z, long wp, long bits) {
    // |z| <= 1/2: straight summation, tail < |z|^{N+1}/(1-|z|)
    Complex acc(wp), zp(Real(1l, wp));
    Real az = abs(z);
    double la = az.to_double();
    long N = (long)((double)(bits + 8) / (la > 0 ? -std::log2(la) : 1e9)) + 2;
    for (long n = 1; n <= N; ++n) {
        zp = zp * z;
        Real nk = pow(Real(n, wp), k);
        acc += zp / nk;
    }
    return acc;
}

Complex li_logseries(long k, const Complex& z, const PrecisionContext& ctx, long wp) {
    // Li_k(e^u) = sum_{j>=0, j!=k-1} zeta(k-j) u^j/j! + u^{k-1}/(k-1)! (H_{k-1} - log(-u))
    Complex u = log(z);
    Complex acc(wp);
    Complex upow(Real(1l, wp)); // u^j/j!
    Real two_pi = 2l * const_pi(wp);
    double ratio = (abs(u) / two_pi).to_double();
    if (ratio > 0.995)
        throw ConvergenceError("li_int: log-series does not converge at this point");
    long terms = (long)((double)(ctx.work_bits() + 16) / -std::log2(ratio > 1e-30 ? ratio : 1e-30)) + 4;
    for (long j = 0; j <= terms; ++j) {
        if (j != k - 1) {
            Real zv = (k - j >= 2)
                          ? zeta_real(Rat(k - j), ctx)
                          : Real(zeta_nonpositive(k - j), wp);
            acc += upow * zv;
        }
        upow = upow * u / Real(j + 1, wp);
    }
    // the log term
    Rat H(0);
    for (long j = 1; j <= k - 1; ++j) H += Rat(1, (long)j);
    Complex uk(Real(1l, wp));
    for (long j = 0; j < k - 1; ++j) uk = uk * u;
    uk = uk / Real(factorial(k - 1), wp);
    Complex Hc(Real(H, wp));
    acc += uk * (Hc - log(-u));
    return acc;
}

bool on_cut(const Complex& z) {
    return z.im.is_zero() && z.re >= Real(1l, z.prec());
}

} // namespace

Complex li_int(long k, const Complex& z, const PrecisionContext& ctx) {
    if (k < 1) throw DomainError("li_int: k must be >= 1");
    long wp = ctx.work_bits();
    if (z.is_zero()) return Complex(wp);
    if (on_cut(z)) throw DomainError("li_int: point lies on the cut [1, oo)");

    if (k == 1) {
        Complex one(Real(1l, wp));
        return -log(one - z);
    }

    Real az = abs(z);
    double a = az.to_double();
    if (a <= 0.5) return li_direct(k, z, wp, ctx.work_bits());
    if (a < 2.0) return li_logseries(k, z, ctx, wp);

    // inversion: Li_k(z) = (-1)^{k+1} Li_k(1/z) - (2 pi i)^k/k! B_k(log z/(2 pi i))
    Complex one(Real(1l, wp));
    Complex inv = one / z;
    Complex li_inv = (abs(inv).to_double() <= 0.5) ? li_direct(k, inv, wp, ctx.work_bits())
                                                   : li_logseries(k, inv, ctx, wp);
    Complex two_pi_i(Real(0.0, wp), 2l * const_pi(wp));
    Complex w = log(z) / two_pi_i;
    auto B = bernoulli_poly(k);
    Complex bval(wp);
    for (long j = k; j >= 0; --j) {
        bval = bval * w;
        bval.re += Real(B[(size_t)j], wp);
    }
    Complex corr = pow(two_pi_i, k) * bval / Real(factorial(k), wp);
    Complex r = -corr;
    if (k % 2 == 0) r -= li_inv;
    else r += li_inv;
    return r;
}

Complex li_frac(const Rat& alpha, const Complex& z, const PrecisionContext& ctx) {
    long wp = ctx.work_bits();
    if (z.is_zero()) return Complex(wp);
    Real az = abs(z);
    if (!(az < Real(1l, wp)))
        throw DomainError("li_frac: |z| must be < 1");
    double a = az.to_double();
    double la = -std::log2(a);
    double aneg = alpha < 0 ? -alpha.get_d() : 0.0;
    // choose N so that N^{ -alpha } |z|^N and the geometric tail clear the target
    double bits_needed = (double)(ctx.work_bits() + 16);
    double N_est = (bits_needed + 8) / la;
    for (int it = 0; it < 4; ++it)
        N_est = (bits_needed + aneg * std::log2(std::max(N_est, 2.0)) + 8) / la;
    long N = (long)N_est + 8;
    if (N > 20000000)
        throw ConvergenceError("li_frac: |z| too close to 1; would need " + std::to_string(N) +
                               " terms at this precision");
    Real ar(alpha, wp);
    Complex acc(wp), zp(Real(1l, wp));
    for (long n = 1; n <= N; ++n) {
        zp = zp * z;
        Real np = exp(-ar * log(Real(n, wp)));
        acc += zp * np;
    }
    return acc;
}

BranchedValue rogers(const Complex& z, const PrecisionContext& ctx,
                     long branch_log_z, long branch_log_1mz) {
    long wp = ctx.work_bits();
    Complex one(Real(1l, wp));
    if (z.is_zero() || (z.im.is_zero() && z.re == Real(1l, z.prec())))
        throw DomainError("rogers: z in {0,1}; use the certified limit values");
    Complex lz = log(z), l1mz = log(one - z);
    if (branch_log_z || branch_log_1mz) {
        Complex shift(Real(0.0, wp), 2l * const_pi(wp));
        if (branch_log_z) lz += Real((long)branch_log_z, wp) * shift;
        if (branch_log_1mz) l1mz += Real((long)branch_log_1mz, wp) * shift;
    }
    Real pi = const_pi(wp);
    Complex val = li_int(2, z, ctx) + (lz * l1mz) / Real(2l, wp);
    val.re -= pi * pi / 6l;
    return BranchedValue{val, branch_log_z, branch_log_1mz};
}

Real rogers_limit_at_one(const PrecisionContext& ctx) { return Real(0.0, ctx.work_bits()); }

Real rogers_limit_at_zero(const PrecisionContext& ctx) {
    Real pi = const_pi(ctx.work_bits());
    return -(pi * pi) / 6l;
}

} // namespace qlab
