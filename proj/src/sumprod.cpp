#include "qlab/sumprod.hpp"

namespace qlab {

HabiroElement kashaev_31() {
    SumProductSpec s;
    s.eps = 1;
    s.c = 0;
    s.c_r[1] = 1;
    return HabiroElement::from_spec(s, "3_1");
}

HabiroElement kashaev_41() {
    SumProductSpec s;
    s.eps = -1;
    s.c = -1;
    s.c_r[1] = 2;
    return HabiroElement::from_spec(s, "4_1");
}

HabiroElement frandom_element() {
    SumProductSpec s;
    s.eps = 1;
    s.c = 0;
    s.c_r[1] = 1;
    LevelMultiplier m;
    m.poly = [](long n) {
        if (n > 40) throw DomainError("frandom: q^(2^n) exceeds expandable degree at n=" +
                                      std::to_string(n));
        return LaurentPoly::monomial(1, 1L << n);
    };
    m.eval = [](long n, long N, const PrecisionContext& ctx) {
        // zeta_N^(2^n mod N)
        Int e;
        Int two(2), mod(N);
        mpz_powm_ui(e.get_mpz_t(), two.get_mpz_t(), (unsigned long)n, mod.get_mpz_t());
        return root_of_unity(e.get_si(), N, ctx.work_bits());
    };
    return HabiroElement::from_spec_mult(s, std::move(m), "frandom");
}

HabiroElement habiro_from_spec(const SumProductSpec& s) {
    return HabiroElement::from_spec(s, s.str());
}

Complex sum_product_seq(const SumProductSpec& s, long n, const PrecisionContext& ctx) {
    if (n < 1) throw DomainError("sum_product_seq: n must be >= 1");
    long wp = ctx.work_bits();
    Complex total(wp), prod(Real(1l, wp));
    for (long j = 1; j <= n; ++j) {
        prod = prod * s.F(Real(j, wp) / Real(n, wp), ctx);
        total += prod;
    }
    return total;
}

SeriesQ sigma_pi_series(const SumProductSpec& s, long K) {
    if (K < 1) throw DomainError("sigma_pi_series: K must be >= 1");
    // SigmaPi(x) = f_s(e^u) - 1 at u = 2*pi*i/x, and the u-expansion of
    // f_s(e^u) is exactly the Taylor expansion at q = 1.
    SeriesQ t = habiro_taylor1(habiro_from_spec(s), K);
    std::vector<Rat> g(t.coeffs());
    g[0] -= 1;
    return SeriesQ(Var::InvX, std::move(g));
}

SeriesC sigma_pi_series_complex(const SumProductSpec& s, long K, const PrecisionContext& ctx) {
    SeriesQ g = sigma_pi_series(s, K);
    long wp = ctx.work_bits();
    Complex two_pi_i(Real(0.0, wp), 2l * const_pi(wp));
    std::vector<Complex> out;
    out.reserve(g.order());
    Complex p(Real(1l, wp));
    for (size_t k = 0; k < g.order(); ++k) {
        Complex c = p * Real(g[k], wp);
        out.push_back(std::move(c));
        p = p * two_pi_i;
    }
    return SeriesC(Var::InvX, std::move(out));
}

} // namespace qlab
