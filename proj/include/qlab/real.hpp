#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>

#include "qlab/errors.hpp"
#include "qlab/precision.hpp"

namespace qlab {

using Int = mpz_class;
using Rat = mpq_class;

/// Arbitrary-precision real number (thin RAII wrapper over mpfr_t).
///
/// The precision is fixed per value; binary operations produce results at the
/// larger of the two operand precisions, rounded to nearest.
class Real {
  public:
    Real() { mpfr_init2(v_, 64); mpfr_set_zero(v_, 1); }
    explicit Real(long prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    Real(double x, long prec) { mpfr_init2(v_, prec); mpfr_set_d(v_, x, MPFR_RNDN); }
    Real(long x, long prec) { mpfr_init2(v_, prec); mpfr_set_si(v_, x, MPFR_RNDN); }
    Real(const Int& x, long prec) { mpfr_init2(v_, prec); mpfr_set_z(v_, x.get_mpz_t(), MPFR_RNDN); }
    Real(const Rat& x, long prec) { mpfr_init2(v_, prec); mpfr_set_q(v_, x.get_mpq_t(), MPFR_RNDN); }
    Real(const std::string& s, long prec) {
        mpfr_init2(v_, prec);
        if (mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN) != 0)
            throw DataError("Real: cannot parse '" + s + "'");
    }

    Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept { mpfr_init2(v_, 64); mpfr_swap(v_, o.v_); }
    Real& operator=(const Real& o) {
        if (this != &o) { mpfr_set_prec(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
        return *this;
    }
    Real& operator=(Real&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
    ~Real() { mpfr_clear(v_); }

    long prec() const { return mpfr_get_prec(v_); }
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    /// Decimal string with full stored precision (round-trip safe).
    std::string str(size_t digits = 0) const {
        if (!is_finite()) return mpfr_nan_p(v_) ? "nan" : (sign() > 0 ? "inf" : "-inf");
        if (digits == 0) digits = (size_t)(prec() * 0.30103) + 3;
        mpfr_exp_t e;
        char* s = mpfr_get_str(nullptr, &e, 10, digits, v_, MPFR_RNDN);
        std::string mant(s);
        mpfr_free_str(s);
        bool neg = !mant.empty() && mant[0] == '-';
        std::string digs = neg ? mant.substr(1) : mant;
        std::string out = (neg ? "-" : "");
        out += "0." + digs + "e" + std::to_string((long)e);
        return out;
    }

    friend Real operator-(const Real& a) { Real r(a.prec()); mpfr_neg(r.v_, a.v_, MPFR_RNDN); return r; }

#define QLAB_REAL_BINOP(op, fn)                                                   \
    friend Real operator op(const Real& a, const Real& b) {                      \
        Real r(std::max(a.prec(), b.prec()));                                     \
        fn(r.v_, a.v_, b.v_, MPFR_RNDN);                                          \
        return r;                                                                 \
    }                                                                             \
    friend Real operator op(const Real& a, long b) {                             \
        Real r(a.prec());                                                         \
        fn##_si(r.v_, a.v_, b, MPFR_RNDN);                                        \
        return r;                                                                 \
    }
    QLAB_REAL_BINOP(+, mpfr_add)
    QLAB_REAL_BINOP(-, mpfr_sub)
    QLAB_REAL_BINOP(*, mpfr_mul)
    QLAB_REAL_BINOP(/, mpfr_div)
#undef QLAB_REAL_BINOP

    friend Real operator*(long a, const Real& b) { return b * a; }
    friend Real operator+(long a, const Real& b) { return b + a; }
    friend Real operator-(long a, const Real& b) {
        Real r(b.prec()); mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN); return r;
    }
    friend Real operator/(long a, const Real& b) {
        Real r(b.prec()); mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN); return r;
    }

    Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_); }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_); }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_); }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_); }
    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_); }
    friend bool operator!=(const Real& a, const Real& b) { return !mpfr_equal_p(a.v_, b.v_); }

  private:
    mpfr_t v_;
};

#define QLAB_REAL_FN1(name, fn)                                                   \
    inline Real name(const Real& a) {                                            \
        Real r(a.prec());                                                         \
        fn(r.raw(), a.raw(), MPFR_RNDN);                                          \
        return r;                                                                 \
    }
QLAB_REAL_FN1(abs, mpfr_abs)
QLAB_REAL_FN1(sqrt, mpfr_sqrt)
QLAB_REAL_FN1(exp, mpfr_exp)
QLAB_REAL_FN1(log, mpfr_log)
QLAB_REAL_FN1(sin, mpfr_sin)
QLAB_REAL_FN1(cos, mpfr_cos)
QLAB_REAL_FN1(atan, mpfr_atan)
#undef QLAB_REAL_FN1

inline Real floorr(const Real& a) {
    Real r(a.prec());
    mpfr_rint(r.raw(), a.raw(), MPFR_RNDD);
    return r;
}
inline Real roundr(const Real& a) {
    Real r(a.prec());
    mpfr_rint(r.raw(), a.raw(), MPFR_RNDNA);
    return r;
}

inline Real atan2(const Real& y, const Real& x) {
    Real r(std::max(y.prec(), x.prec()));
    mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
    return r;
}
inline Real hypot(const Real& x, const Real& y) {
    Real r(std::max(y.prec(), x.prec()));
    mpfr_hypot(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
    return r;
}
inline Real pow(const Real& a, const Real& b) {
    Real r(std::max(a.prec(), b.prec()));
    mpfr_pow(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}
inline Real pow(const Real& a, long n) {
    Real r(a.prec());
    mpfr_pow_si(r.raw(), a.raw(), n, MPFR_RNDN);
    return r;
}
inline Real const_pi(long prec) {
    Real r(prec);
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}
inline Real log2_real(const Real& a) {
    Real r(a.prec());
    mpfr_log2(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

/// Nearest integer, with the distance to it (used by rounding certificates).
inline Int round_to_int(const Real& a, Real* err = nullptr) {
    Real rr = roundr(a);
    if (err) *err = abs(a - rr);
    Int z;
    mpfr_get_z(z.get_mpz_t(), rr.raw(), MPFR_RNDN);
    return z;
}

} // namespace qlab
