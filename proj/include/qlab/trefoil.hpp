#pragma once

#include "qlab/complexhp.hpp"

namespace qlab {

/// The primitive Dirichlet character of conductor 12:
/// chi(1) = chi(11) = 1, chi(5) = chi(7) = -1 mod 12, zero elsewhere.
struct Character12 {
    int operator()(long n) const {
        long r = n % 12;
        if (r < 0) r += 12;
        if (r == 1 || r == 11) return 1;
        if (r == 5 || r == 7) return -1;
        return 0;
    }
};

/// Borel-plane kernel of the trefoil decomposition, truncated chi-series:
///
///   Ghat(p) = -(3 sqrt(2) pi^2 / 2) i * sum_{m<=terms} chi(m) m (m^2 pi^2/6 + 2 pi i p)^{-5/2}
///
/// This is the paper's kernel evaluated along the rotated Laplace ray
/// (argument 2*pi*i*p), which keeps its branch points off the contour.
Complex trefoil_borel_kernel(const Real& p, long terms, const PrecisionContext& ctx);

struct TrefoilDecomposition {
    Complex kashaev;       // exact Z_{3_1, n}
    Complex reconstructed; // e^{-i pi/(12n)} (zeta_24^{3-n} n^{3/2} + 1 + Laplace integral)
    Real relative_residual;
    Real quadrature_error;
};

/// Exact Kashaev value against the singular-term + chi-series Laplace
/// reconstruction; returns the relative residual |Z - rec| / |Z|.
TrefoilDecomposition trefoil_decomposition_check(long n, long terms, const PrecisionContext& ctx);

} // namespace qlab
