#include "qlab/series.hpp"

#include "qlab/rational.hpp"

namespace qlab {

SeriesQ borel(const SeriesQ& s) {
    if (s.var() != Var::InvX) throw DomainError("borel: input must be a series in 1/x");
    if (s.order() < 1) throw DomainError("borel: need order >= 1");
    std::vector<Rat> out;
    out.reserve(s.order() - 1);
    for (size_t n = 0; n + 1 < s.order(); ++n)
        out.push_back(s[n + 1] / Rat(factorial((long)n)));
    return SeriesQ(Var::Z, std::move(out));
}

SeriesC borel(const SeriesC& s, const PrecisionContext& ctx) {
    if (s.var() != Var::InvX) throw DomainError("borel: input must be a series in 1/x");
    if (s.order() < 1) throw DomainError("borel: need order >= 1");
    std::vector<Complex> out;
    out.reserve(s.order() - 1);
    for (size_t n = 0; n + 1 < s.order(); ++n)
        out.push_back(s[n + 1] / Real(factorial((long)n), ctx.work_bits()));
    return SeriesC(Var::Z, std::move(out));
}

SeriesC to_complex(const SeriesQ& s, const PrecisionContext& ctx) {
    std::vector<Complex> out;
    out.reserve(s.order());
    for (size_t i = 0; i < s.order(); ++i) {
        Complex c(ctx.work_bits());
        c.re = Real(s[i], ctx.work_bits());
        out.push_back(std::move(c));
    }
    return SeriesC(s.var(), std::move(out));
}

} // namespace qlab
