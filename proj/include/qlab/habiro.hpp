#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>

#include "qlab/laurent.hpp"
#include "qlab/series.hpp"

namespace qlab {

/// Defining data of phi(q) = eps * q^c * prod_r (1 - q^r)^{c_r} and of the
/// associated sum-product model F(x) = phi(exp(2*pi*i*x)).
///
/// The per-factor reading of the q^c exponent is used, so that
/// prod_{j<=n} phi(q^j) = eps^n q^{c n(n+1)/2} prod_r (q^r)_n^{c_r}.
struct SumProductSpec {
    int eps = 1;
    long c = 0;
    std::map<long, long> c_r;

    long weight() const; // sum of the c_r
    void validate() const;

    /// phi as an exact Laurent polynomial.
    LaurentPoly phi_poly() const;

    /// phi evaluated at a complex point q != 0.
    Complex phi(const Complex& q) const;

    /// F(x) = phi(exp(2*pi*i*x)) for real x.
    Complex F(const Real& x, const PrecisionContext& ctx) const;

    std::string str() const;
};

/// Level-n multiplier attached to a Habiro element: term_n = m_n(q) * base_n(q).
///
/// `eval` may override the polynomial route at roots of unity (needed when the
/// exponents are too large to expand, as for q^(2^n)).
struct LevelMultiplier {
    std::function<LaurentPoly(long)> poly;
    std::function<Complex(long n, long N, const PrecisionContext&)> eval; // optional
};

/// Element of the Habiro ring presented as f(q) = sum_n f_n(q) (q)_n.
///
/// Elements are immutable after construction.  Two presentations are
/// supported: a generic generator n -> f_n(q), and a structured form
/// term_n = m_n(q) * prod_{j<=n} phi(q^j) that evaluation and Taylor
/// expansion exploit for incremental computation.
class HabiroElement {
  public:
    /// Element with level-n term prod_{j<=n} phi(q^j); requires weight >= 1.
    static HabiroElement from_spec(SumProductSpec s, std::string label);

    /// Structured element with an extra level multiplier m_n(q).
    static HabiroElement from_spec_mult(SumProductSpec s, LevelMultiplier m, std::string label);

    /// Generic element from its generator n -> f_n(q).
    static HabiroElement custom(std::function<LaurentPoly(long)> f_n, std::string label);

    const std::string& label() const { return label_; }
    bool spec_backed() const { return spec_.has_value(); }
    const std::optional<SumProductSpec>& spec() const { return spec_; }
    const std::optional<LevelMultiplier>& mult() const { return mult_; }

    /// The generator value f_n(q).
    LaurentPoly f(long n) const;

    /// The level-n summand f_n(q) * (q)_n.
    LaurentPoly term(long n) const;

  private:
    std::string label_;
    std::optional<SumProductSpec> spec_;
    std::optional<LevelMultiplier> mult_;
    std::function<LaurentPoly(long)> custom_f_;
};

/// f evaluated at the primitive N-th root of unity:
/// sum_{n=0}^{N-1} f_n(q) (q)_n at q = exp(2*pi*i/N).  Terms with n >= N
/// vanish because (q)_n does, and are not computed.
Complex habiro_eval(const HabiroElement& f, long N, const PrecisionContext& ctx);

/// Coefficients [1, f(zeta_1), f(zeta_2), ..., f(zeta_Nmax)] of L^np_f.
/// Distinct levels may be evaluated in parallel; output order is by index.
std::vector<Complex> habiro_np_coeffs(const HabiroElement& f, long Nmax,
                                      const PrecisionContext& ctx, int threads = 1);

/// Order-K Taylor expansion of f(e^h) at h = 0, exact rational coefficients.
/// Only levels n <= K contribute since (e^h)_n vanishes to order n.
SeriesQ habiro_taylor1(const HabiroElement& f, long K);

} // namespace qlab
