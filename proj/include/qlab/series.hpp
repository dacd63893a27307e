#pragma once

#include <vector>

#include "qlab/complexhp.hpp"
#include "qlab/errors.hpp"
#include "qlab/real.hpp"

namespace qlab {

/// Variable tag for truncated power series.
enum class Var {
    InvX, // series in h = 1/x
    Z     // series in z
};

namespace detail {
inline Rat scalar_from_long(long v, const Rat&) { return Rat(v); }
inline Complex scalar_from_long(long v, const Complex& like) {
    Complex c(like.prec() > 2 ? like.prec() : 64);
    c.re = Real(v, c.prec());
    return c;
}
inline bool scalar_is_zero(const Rat& x) { return x == 0; }
inline bool scalar_is_zero(const Complex& x) { return x.is_zero(); }
inline Rat scalar_div_long(const Rat& x, long v) { return x / Rat(v); }
inline Complex scalar_div_long(const Complex& x, long v) { return x / Real(v, x.prec()); }
} // namespace detail

/// Truncated power series with explicit truncation order.
///
/// order() is the number of stored coefficients; arithmetic truncates to the
/// shorter operand and never extends the order.
template <typename S>
class Series {
  public:
    Series() = default;
    Series(Var var, std::vector<S> coeffs) : var_(var), c_(std::move(coeffs)) {}

    Var var() const { return var_; }
    size_t order() const { return c_.size(); }
    const std::vector<S>& coeffs() const { return c_; }
    std::vector<S>& coeffs() { return c_; }
    const S& operator[](size_t i) const { return c_[i]; }

    static Series zero(Var v, size_t order, const S& like) {
        std::vector<S> c(order, detail::scalar_from_long(0, like));
        return Series(v, std::move(c));
    }

    friend Series operator+(const Series& a, const Series& b) {
        check_compat(a, b);
        size_t n = std::min(a.order(), b.order());
        std::vector<S> c(a.c_.begin(), a.c_.begin() + (long)n);
        for (size_t i = 0; i < n; ++i) c[i] = c[i] + b.c_[i];
        return Series(a.var_, std::move(c));
    }
    friend Series operator-(const Series& a, const Series& b) {
        check_compat(a, b);
        size_t n = std::min(a.order(), b.order());
        std::vector<S> c(a.c_.begin(), a.c_.begin() + (long)n);
        for (size_t i = 0; i < n; ++i) c[i] = c[i] - b.c_[i];
        return Series(a.var_, std::move(c));
    }
    friend Series operator*(const Series& a, const Series& b) {
        check_compat(a, b);
        size_t n = std::min(a.order(), b.order());
        if (n == 0) return Series(a.var_, {});
        Series r = zero(a.var_, n, a.c_.empty() ? b.c_[0] : a.c_[0]);
        for (size_t i = 0; i < n; ++i) {
            if (detail::scalar_is_zero(a.c_[i])) continue;
            for (size_t j = 0; i + j < n && j < b.order(); ++j)
                r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
        }
        return r;
    }

    Series scaled(const S& k) const {
        Series r = *this;
        for (auto& x : r.c_) x = x * k;
        return r;
    }

    /// f(g) for series g with zero constant term.
    Series compose(const Series& g) const {
        check_compat(*this, g);
        if (g.order() == 0 || order() == 0) return Series(var_, {});
        if (!detail::scalar_is_zero(g.c_[0]))
            throw DomainError("Series::compose: inner series must have zero constant term");
        size_t n = std::min(order(), g.order());
        Series r = zero(var_, n, c_[0]);
        for (size_t k = order(); k-- > 0;) {
            r = r * g;
            r.c_.resize(n, detail::scalar_from_long(0, c_[0]));
            while (r.c_.size() < n) r.c_.push_back(detail::scalar_from_long(0, c_[0]));
            r.c_[0] = r.c_.empty() ? c_[k] : r.c_[0] + c_[k];
        }
        return r;
    }

    /// log(1 + s) for series s with zero constant term.
    Series log1p() const {
        if (order() == 0) return *this;
        if (!detail::scalar_is_zero(c_[0]))
            throw DomainError("Series::log1p: series must have zero constant term");
        size_t n = order();
        Series r = zero(var_, n, c_[0]);
        Series p = *this; // s^k
        for (size_t k = 1; k < n + 1; ++k) {
            bool vanished = true;
            for (size_t i = 0; i < n; ++i) {
                if (detail::scalar_is_zero(p.c_[i])) continue;
                vanished = false;
                S t = detail::scalar_div_long(p.c_[i], (long)k);
                r.c_[i] = (k % 2 == 1) ? r.c_[i] + t : r.c_[i] - t;
            }
            if (vanished) break;
            p = p * *this;
        }
        return r;
    }

  private:
    static void check_compat(const Series& a, const Series& b) {
        if (a.var_ != b.var_) throw DomainError("Series: incompatible variables");
    }
    Var var_ = Var::Z;
    std::vector<S> c_;
};

using SeriesQ = Series<Rat>;
using SeriesC = Series<Complex>;

/// Borel transform: sum a_n/x^n  |->  sum a_{n+1} z^n / n!.
/// The constant term a_0 is discarded; output order = input order - 1.
SeriesQ borel(const SeriesQ& s);
SeriesC borel(const SeriesC& s, const PrecisionContext& ctx);

/// Exact-rational series evaluated to complex coefficients at ctx precision.
SeriesC to_complex(const SeriesQ& s, const PrecisionContext& ctx);

} // namespace qlab
