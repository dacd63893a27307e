#pragma once

#include "qlab/habiro.hpp"

namespace qlab {

/// f_{3_1}(q) = sum_n (q)_n, presented with the product structure phi = 1-q.
HabiroElement kashaev_31();

/// f_{4_1}(q) = sum_n (-1)^n q^{-n(n+1)/2} (q)_n^2, phi = -q^{-1}(1-q)^2.
HabiroElement kashaev_41();

/// f(q) = sum_n q^{2^n} (q)_n.
HabiroElement frandom_element();

/// Element whose level-n term is prod_{j<=n} phi(q^j); requires F(0) = 0.
HabiroElement habiro_from_spec(const SumProductSpec& s);

/// a_n = sum_{k=1..n} prod_{j=1..k} F(j/n), F evaluated afresh at each j/n.
Complex sum_product_seq(const SumProductSpec& s, long n, const PrecisionContext& ctx);

/// Order-K truncation of SigmaPi(x) = sum_{n>=1} prod_{j<=n} F(j/x) in the
/// scaled variable u = 2*pi*i/x: returns exact rationals gamma_k with
/// [x^{-k}] SigmaPi = (2*pi*i)^k gamma_k.  Only levels n <= K contribute.
SeriesQ sigma_pi_series(const SumProductSpec& s, long K);

/// The same series with the (2*pi*i)^k powers multiplied in.
SeriesC sigma_pi_series_complex(const SumProductSpec& s, long K, const PrecisionContext& ctx);

} // namespace qlab
