#pragma once

#include <vector>

#include "qlab/complexhp.hpp"
#include "qlab/real.hpp"

namespace qlab {

/// Exact Laurent polynomial in q with arbitrary-size integer coefficients.
///
/// Stored densely over its support [min_exp, max_exp]; all arithmetic is exact.
class LaurentPoly {
  public:
    LaurentPoly() = default;

    /// Monomial c * q^e.
    static LaurentPoly monomial(Int c, long e);
    static LaurentPoly one() { return monomial(1, 0); }

    bool is_zero() const { return coeffs_.empty(); }
    long min_exp() const { return min_exp_; }
    long max_exp() const { return min_exp_ + (long)coeffs_.size() - 1; }
    size_t support_size() const;

    /// Coefficient of q^e (zero outside the stored range).
    const Int& coeff(long e) const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const Int& c, const LaurentPoly& a);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

    /// q^e * p.
    LaurentPoly shifted(long e) const;

    /// Exact division; throws DomainError if the remainder is nonzero.
    LaurentPoly div_exact(const LaurentPoly& d) const;

    /// Substitution q -> q^-1.
    LaurentPoly reciprocal() const;

    /// Value at an arbitrary complex point (Horner over the support).
    Complex eval(const Complex& q) const;

    /// Exact value at q = 1 (sum of coefficients).
    Int eval_one() const;

    /// Iteration over (exponent, coefficient) pairs with nonzero coefficient.
    template <typename F>
    void for_each(F&& f) const {
        for (size_t i = 0; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) f(min_exp_ + (long)i, coeffs_[i]);
    }

    std::string str() const;

    /// Parse "exponent:coefficient" space-separated pairs (twist-knot files).
    static LaurentPoly parse_pairs(const std::string& line);

  private:
    void trim();
    long min_exp_ = 0;
    std::vector<Int> coeffs_; // coeffs_[i] is the coefficient of q^(min_exp_+i)
};

/// Quantum factorial (q^r)_n = prod_{k=1..n} (1 - q^{k r}); (q^r)_0 = 1.
LaurentPoly qpochhammer(long n, long r = 1);

/// Value of p at the primitive N-th root of unity exp(2*pi*i/N).
Complex eval_root(const LaurentPoly& p, long N, const PrecisionContext& ctx);

} // namespace qlab
