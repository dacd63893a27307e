#pragma once

#include "qlab/real.hpp"

namespace qlab {

/// Arbitrary-precision complex number on top of Real.
///
/// log/arg/pow use the principal branch throughout; multivaluedness is handled
/// by the callers that care (see BranchedValue in specialfn).
struct Complex {
    Real re, im;

    Complex() = default;
    explicit Complex(long prec) : re(prec), im(prec) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    Complex(const Real& r) : re(r), im(Real(r.prec())) {}
    Complex(double r, double i, long prec) : re(r, prec), im(i, prec) {}

    long prec() const { return std::max(re.prec(), im.prec()); }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
    friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
    friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator*(const Real& a, const Complex& b) { return {a * b.re, a * b.im}; }
    friend Complex operator*(const Complex& b, const Real& a) { return {a * b.re, a * b.im}; }
    friend Complex operator/(const Complex& a, const Real& b) { return {a.re / b, a.im / b}; }
    friend Complex operator/(const Complex& a, const Complex& b) {
        Real d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
    Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
    Complex& operator*=(const Complex& o) { *this = *this * o; return *this; }

    Complex conj() const { return {re, -im}; }
};

inline Real abs(const Complex& z) { return hypot(z.re, z.im); }
inline Real arg(const Complex& z) { return atan2(z.im, z.re); }

inline Complex exp(const Complex& z) {
    Real m = exp(z.re);
    return {m * cos(z.im), m * sin(z.im)};
}

/// Principal logarithm, Im in (-pi, pi].
inline Complex log(const Complex& z) { return {log(abs(z)), arg(z)}; }

inline Complex pow(const Complex& z, long n) {
    long p = z.prec();
    Complex r(p);
    r.re = Real(1l, p);
    Complex base = z;
    unsigned long e = (n < 0) ? (unsigned long)(-n) : (unsigned long)n;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    if (n < 0) {
        Complex one(p);
        one.re = Real(1l, p);
        r = one / r;
    }
    return r;
}

/// Principal power z^a for real exponent a (z != 0).
inline Complex pow(const Complex& z, const Real& a) {
    Real m = pow(abs(z), a), t = a * arg(z);
    return {m * cos(t), m * sin(t)};
}

/// exp(2*pi*i*t).
inline Complex unit_circle(const Real& t, long prec) {
    Real th = 2l * const_pi(prec) * t;
    return {cos(th), sin(th)};
}

/// Primitive N-th root of unity exp(2*pi*i*k/N).
inline Complex root_of_unity(long k, long N, long prec) {
    Real th = (2l * const_pi(prec) * k) / N;
    return {cos(th), sin(th)};
}

} // namespace qlab
