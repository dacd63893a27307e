#include "doctest.h"

#include "qlab/habiro.hpp"
#include <cmath>

#include "qlab/rational.hpp"

using namespace qlab;

namespace {

SumProductSpec trefoil_spec() {
    SumProductSpec s;
    s.eps = 1;
    s.c = 0;
    s.c_r[1] = 1;
    return s;
}

SumProductSpec fig8_spec() {
    SumProductSpec s;
    s.eps = -1;
    s.c = -1;
    s.c_r[1] = 2;
    return s;
}

// generator route, used as the independent oracle for the structured paths
HabiroElement trefoil_custom() {
    return HabiroElement::custom([](long) { return LaurentPoly::one(); }, "3_1 custom");
}

HabiroElement fig8_custom() {
    return HabiroElement::custom(
        [](long n) {
            Int sign = (n % 2 == 0) ? 1 : -1;
            return LaurentPoly::monomial(sign, -n * (n + 1) / 2) * qpochhammer(n);
        },
        "4_1 custom");
}

} // namespace

TEST_CASE("habiro_eval small values of the knot elements") {
    PrecisionContext ctx(128);
    auto f31 = HabiroElement::from_spec(trefoil_spec(), "3_1");
    auto f41 = HabiroElement::from_spec(fig8_spec(), "4_1");

    CHECK(abs(habiro_eval(f31, 1, ctx) - Complex(Real(1l, 128))).to_double() < 1e-30);
    CHECK(abs(habiro_eval(f31, 2, ctx) - Complex(Real(3l, 128))).to_double() < 1e-30);
    CHECK(abs(habiro_eval(f41, 1, ctx) - Complex(Real(1l, 128))).to_double() < 1e-30);
    CHECK(abs(habiro_eval(f41, 2, ctx) - Complex(Real(5l, 128))).to_double() < 1e-30);
    CHECK(abs(habiro_eval(f41, 3, ctx) - Complex(Real(13l, 128))).to_double() < 1e-30);
}

TEST_CASE("structured evaluation agrees with the generator route") {
    PrecisionContext ctx(128);
    auto f31 = HabiroElement::from_spec(trefoil_spec(), "3_1");
    auto f41 = HabiroElement::from_spec(fig8_spec(), "4_1");
    auto c31 = trefoil_custom();
    auto c41 = fig8_custom();
    for (long N = 1; N <= 12; ++N) {
        CHECK(abs(habiro_eval(f31, N, ctx) - habiro_eval(c31, N, ctx)).to_double() < 1e-30);
        CHECK(abs(habiro_eval(f41, N, ctx) - habiro_eval(c41, N, ctx)).to_double() < 1e-30);
    }
}

TEST_CASE("terms of spec-backed elements match f_n (q)_n") {
    auto f31 = HabiroElement::from_spec(trefoil_spec(), "3_1");
    auto f41 = HabiroElement::from_spec(fig8_spec(), "4_1");
    auto c41 = fig8_custom();
    for (long n = 0; n <= 10; ++n) {
        CHECK(f31.term(n) == qpochhammer(n));
        CHECK(f31.f(n) == LaurentPoly::one());
        CHECK(f41.term(n) == c41.term(n));
    }
    // spec(eps=1,c=0,c_2=1): terms (q^2)_n
    SumProductSpec s;
    s.c_r[2] = 1;
    auto e = HabiroElement::from_spec(s, "q2");
    for (long n = 0; n <= 6; ++n) CHECK(e.term(n) == qpochhammer(n, 2));
}

TEST_CASE("habiro_np_coeffs index convention and values") {
    PrecisionContext ctx(128);
    auto f31 = HabiroElement::from_spec(trefoil_spec(), "3_1");
    auto c = habiro_np_coeffs(f31, 2, ctx);
    REQUIRE(c.size() == 3);
    CHECK(abs(c[0] - Complex(Real(1l, 128))).to_double() < 1e-30);
    CHECK(abs(c[1] - Complex(Real(1l, 128))).to_double() < 1e-30);
    CHECK(abs(c[2] - Complex(Real(3l, 128))).to_double() < 1e-30);

    auto f41 = HabiroElement::from_spec(fig8_spec(), "4_1");
    auto d = habiro_np_coeffs(f41, 3, ctx);
    REQUIRE(d.size() == 4);
    CHECK(abs(d[2] - Complex(Real(5l, 128))).to_double() < 1e-30);
    CHECK(abs(d[3] - Complex(Real(13l, 128))).to_double() < 1e-30);

    // constant element: f_0 = 1, all other levels zero
    auto one = HabiroElement::custom(
        [](long n) { return n == 0 ? LaurentPoly::one() : LaurentPoly(); }, "one");
    auto u = habiro_np_coeffs(one, 3, ctx);
    for (auto& v : u) CHECK(abs(v - Complex(Real(1l, 128))).to_double() < 1e-30);
}

TEST_CASE("habiro_np_coeffs is deterministic across thread counts") {
    PrecisionContext ctx(192);
    auto f41 = HabiroElement::from_spec(fig8_spec(), "4_1");
    auto a = habiro_np_coeffs(f41, 25, ctx, 1);
    auto b = habiro_np_coeffs(f41, 25, ctx, 3);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].re == b[i].re);
        CHECK(a[i].im == b[i].im);
    }
}

TEST_CASE("evaluation consistency across precisions (N <= 100)") {
    auto f31 = HabiroElement::from_spec(trefoil_spec(), "3_1");
    PrecisionContext lo(128), hi(256);
    for (long N : {10, 37, 64, 100}) {
        Complex a = habiro_eval(f31, N, lo);
        Complex b = habiro_eval(f31, N, hi);
        Real diff = abs(a - b);
        Real scale = abs(b) + Real(1l, 256);
        // agreement to at least 120 bits
        CHECK((diff / scale).to_double() < std::ldexp(1.0, -120));
    }
}

TEST_CASE("habiro_taylor1 basics") {
    // constant element
    auto one = HabiroElement::custom(
        [](long n) { return n == 0 ? LaurentPoly::one() : LaurentPoly(); }, "one");
    SeriesQ s = habiro_taylor1(one, 4);
    REQUIRE(s.order() == 5);
    CHECK(s[0] == 1);
    for (size_t i = 1; i < 5; ++i) CHECK(s[i] == 0);

    // trefoil at K=0
    auto f31 = HabiroElement::from_spec(trefoil_spec(), "3_1");
    SeriesQ t0 = habiro_taylor1(f31, 0);
    CHECK(t0[0] == 1);
}

TEST_CASE("habiro_taylor1 against the dual-path symbolic oracle") {
    // oracle: expand sum_{n<=K} (e^h)_n with plain rational arithmetic
    const long K = 5;
    std::vector<Rat> oracle((size_t)K + 1, Rat(0));
    {
        // p holds the current product (e^h)_n as plain coefficients of h^j
        std::vector<Rat> p((size_t)K + 1, Rat(0));
        p[0] = 1;
        for (size_t j = 0; j <= K; ++j) oracle[j] += p[j];
        for (long n = 1; n <= K; ++n) {
            // multiply p by (1 - e^{n h}); e^{nh} coeff of h^j is n^j/j!
            std::vector<Rat> np((size_t)K + 1, Rat(0));
            for (long a = 0; a <= K; ++a) {
                if (p[(size_t)a] == 0) continue;
                np[(size_t)a] += p[(size_t)a];
                Rat pw(1);
                for (long b = 0; a + b <= K; ++b) {
                    np[(size_t)(a + b)] -= p[(size_t)a] * pw / Rat(factorial(b));
                    pw *= n;
                }
            }
            p = np;
            for (size_t j = 0; j <= K; ++j) oracle[j] += p[j];
        }
    }
    auto f31 = HabiroElement::from_spec(trefoil_spec(), "3_1");
    SeriesQ s = habiro_taylor1(f31, K);
    for (size_t j = 0; j <= K; ++j) CHECK(s[j] == oracle[j]);
}

TEST_CASE("habiro_taylor1 ignores generator terms beyond K") {
    const long K = 6;
    auto full = HabiroElement::custom([](long) { return LaurentPoly::one(); }, "full");
    auto clipped = HabiroElement::custom(
        [K = K](long n) { return n <= K ? LaurentPoly::one() : LaurentPoly::monomial(7, 3); },
        "clipped");
    SeriesQ a = habiro_taylor1(full, K);
    SeriesQ b = habiro_taylor1(clipped, K);
    for (size_t j = 0; j <= (size_t)K; ++j) CHECK(a[j] == b[j]);
}

TEST_CASE("divergent spec is rejected") {
    SumProductSpec s;
    s.c = 2; // no (1-q^r) factors at all
    CHECK_THROWS_AS(HabiroElement::from_spec(s, "bad"), DomainError);
}
