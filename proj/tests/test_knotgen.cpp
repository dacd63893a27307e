#include "doctest.h"

#include <sstream>

#include "qlab/candidates.hpp"
#include "qlab/multisum.hpp"
#include "qlab/specialfn.hpp"
#include "qlab/sumprod.hpp"
#include "qlab/trefoil.hpp"
#include "qlab/twist.hpp"
#include "qlab/wrt.hpp"

using namespace qlab;

namespace {
const PrecisionContext ctx(256);
double dd(const Complex& z) { return abs(z).to_double(); }
} // namespace

TEST_CASE("kashaev generators at small levels") {
    CHECK(dd(habiro_eval(kashaev_41(), 3, ctx) - Complex(Real(13l, 64))) < 1e-30);
    CHECK(dd(habiro_eval(kashaev_31(), 1, ctx) - Complex(Real(1l, 64))) < 1e-30);
    CHECK(dd(habiro_eval(kashaev_41(), 1, ctx) - Complex(Real(1l, 64))) < 1e-30);
}

TEST_CASE("habiro_from_spec matches the kashaev elements term by term") {
    SumProductSpec tre;
    tre.c_r[1] = 1;
    SumProductSpec f8;
    f8.eps = -1;
    f8.c = -1;
    f8.c_r[1] = 2;
    auto a = habiro_from_spec(tre);
    auto b = habiro_from_spec(f8);
    for (long n = 0; n <= 10; ++n) {
        CHECK(a.term(n) == kashaev_31().term(n));
        CHECK(b.term(n) == kashaev_41().term(n));
    }
}

TEST_CASE("sum_product_seq basics and cross-path identity") {
    SumProductSpec tre;
    tre.c_r[1] = 1;

    // trefoil: a_1 = F(1) = 0, a_2 = F(1/2) + F(1/2)F(1) = 2
    CHECK(dd(sum_product_seq(tre, 1, ctx)) < 1e-40);
    CHECK(dd(sum_product_seq(tre, 2, ctx) - Complex(Real(2l, 64))) < 1e-40);

    // cross-path: a_n + 1 = habiro_eval(f, n) for both knot specs, n <= 40
    SumProductSpec f8;
    f8.eps = -1;
    f8.c = -1;
    f8.c_r[1] = 2;
    PrecisionContext tight(128);
    for (const auto& s : {tre, f8}) {
        auto f = habiro_from_spec(s);
        for (long n = 1; n <= 40; ++n) {
            Complex lhs = sum_product_seq(s, n, tight);
            lhs.re += Real(1l, tight.work_bits());
            Complex rhs = habiro_eval(f, n, tight);
            CHECK((abs(lhs - rhs) / (abs(rhs) + Real(1l, 64))).to_double() < 1e-25);
        }
    }
}

TEST_CASE("sigma_pi_series: trefoil c_1 and downstream wiring") {
    SumProductSpec tre;
    tre.c_r[1] = 1;
    SeriesQ g = sigma_pi_series(tre, 6);
    // c_1 = -2*pi*i means gamma_1 = -1
    CHECK(g[0] == 0);
    CHECK(g[1] == Rat(-1));

    // levels n > K provably absent: the K-truncation of the order-(K+1) run
    SeriesQ g2 = sigma_pi_series(tre, 7);
    for (size_t i = 0; i < g.order(); ++i) CHECK(g[i] == g2[i]);

    // borel of sigma_pi is the L^p model series (definitional wiring)
    SeriesC gc = sigma_pi_series_complex(tre, 6, ctx);
    SeriesC lp = borel(gc, ctx);
    CHECK(lp.order() == gc.order() - 1);
    // b_0 = c_1 = -2*pi*i
    Real tp = 2l * const_pi(ctx.work_bits());
    CHECK(abs(lp[0].im + tp).to_double() < 1e-60);
}

TEST_CASE("frandom element") {
    auto f = frandom_element();
    CHECK(dd(habiro_eval(f, 1, ctx) - Complex(Real(1l, 64))) < 1e-40);
    // N=2: 1 + q^2 (q)_1 at q=-1 -> 1 + 1*2 = 3
    CHECK(dd(habiro_eval(f, 2, ctx) - Complex(Real(3l, 64))) < 1e-40);
    // level-n term degree grows as 2^n
    CHECK(f.term(3).max_exp() == (1 << 3) + 6);
    CHECK(f.term(5).max_exp() == (1 << 5) + 15);
}

TEST_CASE("wrt_s3 values") {
    CHECK(abs(wrt_s3(0, ctx) - Real(1l, 64)).to_double() < 1e-70);
    // n=1: sqrt(2/3) sin(pi/3)
    long wp = ctx.work_bits();
    Real expect = sqrt(Real(2l, wp) / Real(3l, wp)) * sin(const_pi(wp) / 3l);
    CHECK(abs(wrt_s3(1, ctx) - expect).to_double() < 1e-70);
    CHECK(std::abs(wrt_s3(1, ctx).to_double() - 0.7071067811865475) < 1e-15);
    CHECK(abs(wrt_s3(2, ctx) - Real(0.5, wp)).to_double() < 1e-70);
}

TEST_CASE("lnp_s3_polylog agrees with the direct generating series") {
    long wp = ctx.work_bits();
    auto direct = [&](const Complex& z, long N) {
        Complex acc(wp), zp(Real(1l, wp));
        for (long n = 0; n <= N; ++n) {
            acc += zp * wrt_s3(n, ctx);
            zp = zp * z;
        }
        return acc;
    };
    Complex half(0.5, 0.0, wp);
    Real tail(0.0, 64);
    Complex a = lnp_s3_polylog(half, 40, ctx, &tail);
    CHECK(abs(a - direct(half, 200)).to_double() < 1e-10);

    Complex zc = unit_circle(Real(0.1, wp), wp) * Real(0.3, wp); // 0.3 e^{i pi/5}
    CHECK(abs(lnp_s3_polylog(zc, 40, ctx) - direct(zc, 200)).to_double() < 1e-10);

    // K -> K+1 moves the value by less than the reported tail bound
    Complex b = lnp_s3_polylog(half, 41, ctx);
    CHECK(abs(a - b) <= tail);

    CHECK_THROWS_AS(lnp_s3_polylog(Complex(wp), 40, ctx), DomainError);
}

TEST_CASE("verlinde formulas") {
    for (long n : {0l, 3l, 7l}) CHECK(verlinde_sum(0, n) == Rat(1));
    CHECK(verlinde_sum(1, 4) == Rat(5));

    // g=2 polynomial n^3/6 + n^2 + 11 n/6 + 1
    auto poly2 = [](long n) {
        Rat nn(n);
        return nn * nn * nn / 6 + nn * nn + Rat(11) * nn / 6 + 1;
    };
    CHECK(verlinde_sum(2, 2) == Rat(10));
    for (long n = 0; n <= 20; ++n) CHECK(verlinde_sum(2, n) == poly2(n));

    // residue route equals the sum for g in {2,3,4}
    for (long g : {2l, 3l, 4l})
        for (long n = 0; n <= 20; ++n) CHECK(verlinde_residue(g, n) == verlinde_sum(g, n));

    CHECK_THROWS_AS(verlinde_residue(1, 3), DomainError);
}

TEST_CASE("verlinde_sum fits a degree 3g-3 polynomial (g >= 2)") {
    // Lagrange interpolation on 3g-2 points reproduces all n <= 20
    for (long g : {2l, 3l}) {
        long pts = 3 * g - 2;
        auto value = [&](long n) { return verlinde_sum(g, n); };
        auto interp = [&](long x) {
            Rat acc(0);
            for (long i = 0; i < pts; ++i) {
                Rat term = value(i);
                for (long j = 0; j < pts; ++j) {
                    if (i == j) continue;
                    term *= Rat(x - j) / Rat(i - j);
                }
                acc += term;
            }
            return acc;
        };
        for (long n = 0; n <= 20; ++n) CHECK(interp(n) == value(n));
        // degree is exactly 3g-3: interpolating on one fewer point fails somewhere
        bool all_match = true;
        auto interp_short = [&](long x) {
            Rat acc(0);
            for (long i = 0; i < pts - 1; ++i) {
                Rat term = value(i);
                for (long j = 0; j < pts - 1; ++j) {
                    if (i == j) continue;
                    term *= Rat(x - j) / Rat(i - j);
                }
                acc += term;
            }
            return acc;
        };
        for (long n = 0; n <= 20; ++n)
            if (interp_short(n) != value(n)) all_match = false;
        CHECK_FALSE(all_match);
    }
}

TEST_CASE("multisum: binomial and apery") {
    auto bin = binomial_term();
    CHECK(balanced_check(bin));
    CHECK(multisum(bin, 3) == Rat(8));
    for (long n = 0; n <= 30; ++n) {
        Int expect;
        mpz_ui_pow_ui(expect.get_mpz_t(), 2, (unsigned long)n);
        CHECK(multisum(bin, n) == Rat(expect));
    }

    auto ap = apery_term();
    CHECK(balanced_check(ap));
    // direct enumeration oracle at n=2
    Rat expect(0);
    for (long k = 0; k <= 2; ++k) {
        Rat c1 = Rat(factorial(2)) / (Rat(factorial(k)) * Rat(factorial(2 - k)));
        Rat c2 = Rat(factorial(2 + k)) / (Rat(factorial(k)) * Rat(factorial(2)));
        expect += c1 * c1 * c2 * c2;
    }
    CHECK(expect == Rat(73));
    CHECK(multisum(ap, 2) == Rat(73));

    // n=0: only k=0 feasible, C0^0 = 1
    CHECK(multisum(ap, 0) == Rat(1));
}

TEST_CASE("balanced_check properties") {
    // lone positive form n is unbalanced
    BalancedTerm lone;
    lone.forms = {{{1, {}}, +1}};
    CHECK_FALSE(balanced_check(lone));

    // invariance under permuting forms and splitting A into A' + A''
    auto bin = binomial_term();
    BalancedTerm perm = bin;
    std::swap(perm.forms[0], perm.forms[2]);
    CHECK(balanced_check(perm) == balanced_check(bin));

    BalancedTerm split = bin;
    // split n! into (n-k)! (k)! is already there; instead split the n form:
    split.forms[0] = {{0, {1}}, +1};           // k
    split.forms.push_back({{1, {-1}}, +1});    // n-k, same sign
    CHECK(balanced_check(split));
}

TEST_CASE("multisum unbounded direction is reported") {
    BalancedTerm t;
    t.C = {Rat(1)};
    t.forms = {{{1, {1}}, +1}, {{0, {1}}, -1}}; // n+k >= 0 and k >= 0: unbounded in +k
    CHECK_THROWS_WITH_AS(multisum(t, 1), doctest::Contains("unbounded"), DomainError);
}

TEST_CASE("twist knot ingestion and the p=-1 identification") {
    // C == 1 for the figure-eight: the element is term-by-term kashaev_41
    std::istringstream data("p=-1\n0:1\n0:1\n0:1\n0:1\n0:1\n0:1\n");
    auto d = TwistKnotData::load(data, "inline");
    CHECK(d.p == -1);
    auto e = twist_knot_element(d);
    for (long n = 0; n <= 5; ++n) CHECK(e.term(n) == kashaev_41().term(n));
    for (long N = 1; N <= 6; ++N)
        CHECK(dd(habiro_eval(e, N, ctx) - habiro_eval(kashaev_41(), N, ctx)) < 1e-40);

    // level beyond the data names the missing index
    CHECK_THROWS_WITH_AS(e.term(6), doctest::Contains("level 6"), DataError);
    CHECK_THROWS_AS(habiro_eval(e, 8, ctx), DataError);

    // constant element from a single line
    std::istringstream one("p=1\n0:1\n");
    auto d1 = TwistKnotData::load(one, "inline");
    CHECK(twist_knot_element(d1).term(0) == LaurentPoly::one());

    // format errors
    std::istringstream bad1("q=1\n0:1\n");
    CHECK_THROWS_AS(TwistKnotData::load(bad1, "inline"), DataError);
    std::istringstream bad2("p=2\n0:1 junk\n");
    CHECK_THROWS_AS(TwistKnotData::load(bad2, "inline"), DataError);
}

TEST_CASE("vol_41 and the exponentiated values") {
    Real v = vol_41(ctx);
    Real ref("2.029883212819307250042405108549040571883378615060599584034693", 300);
    CHECK(abs(v - ref).to_double() < 1e-40);

    long wp = ctx.work_bits();
    Real tp = 2l * const_pi(wp);
    CHECK(std::abs(exp(-v / tp).to_double() - 0.72392611187952434703122933736) < 1e-16);
    CHECK(std::abs(exp(v / tp).to_double() - 1.38135644451849779337146695685) < 1e-15);
}

TEST_CASE("singular_candidates for the knot specs") {
    SumProductSpec tre;
    tre.c_r[1] = 1;
    auto cs = singular_candidates(tre, 2, ctx);
    CHECK(cs.heuristic);

    long wp = ctx.work_bits();
    auto contains = [&](const std::vector<Complex>& v, const Complex& z, double tol) {
        for (const auto& w : v)
            if (abs(w - z).to_double() < tol) return true;
        return false;
    };
    Complex zero(wp), one(Real(1l, wp));
    CHECK(contains(cs.elambda, zero, 1e-10));
    CHECK(contains(cs.elambda, one, 1e-10));
    // e^{i pi/12}
    Real pi = const_pi(wp);
    Complex target(cos(pi / 12l), sin(pi / 12l));
    CHECK(contains(cs.elambda, target, 1e-10));

    // figure-eight: roots of phi=1 are primitive 6th roots; moduli include e^{+-Vol/2pi}
    SumProductSpec f8;
    f8.eps = -1;
    f8.c = -1;
    f8.c_r[1] = 2;
    auto cf = singular_candidates(f8, 2, ctx);
    CHECK(contains(cf.roots, root_of_unity(1, 6, wp), 1e-30));
    CHECK(contains(cf.roots, root_of_unity(-1, 6, wp), 1e-30));
    Real v = vol_41(ctx);
    bool plus = false, minus = false;
    for (const auto& z : cf.elambda) {
        if (std::abs((abs(z) - exp(v / (2l * pi))).to_double()) < 1e-10) plus = true;
        if (std::abs((abs(z) - exp(-v / (2l * pi))).to_double()) < 1e-10) minus = true;
    }
    CHECK(plus);
    CHECK(minus);

    // phi = 1 - q: root q=1 of phi=0 contributes L(1)=0 -> candidate exp(0)=1
    // (this is the trefoil spec again; the q=0 root of phi=1 gives e^{i pi/12})
    // closure under lambda <-> conj(lambda), i.e. elambda under z -> 1/conj(z)
    for (const auto& z : cs.elambda) {
        if (abs(z).to_double() < 1e-12) continue;
        Complex invconj = one / z.conj();
        CHECK(contains(cs.elambda, invconj, 1e-10));
    }
}

TEST_CASE("character of conductor 12") {
    Character12 chi;
    CHECK(chi(1) == 1);
    CHECK(chi(5) == -1);
    CHECK(chi(7) == -1);
    CHECK(chi(11) == 1);
    CHECK(chi(12) == 0);
    CHECK(chi(6) == 0);
    for (long n = 1; n < 60; ++n) CHECK(chi(n) == chi(n + 12));
}

TEST_CASE("trefoil decomposition at moderate n") {
    auto r = trefoil_decomposition_check(24, 150, ctx);
    CHECK(r.relative_residual.to_double() < 1e-8);

    // residual decreases as the chi-series truncation doubles
    auto a = trefoil_decomposition_check(12, 12, ctx);
    auto b = trefoil_decomposition_check(12, 24, ctx);
    auto c = trefoil_decomposition_check(12, 48, ctx);
    CHECK(b.relative_residual < a.relative_residual);
    CHECK(c.relative_residual < b.relative_residual);
}
