#include "qlab/laurent.hpp"

#include <sstream>

#include "qlab/errors.hpp"

namespace qlab {

LaurentPoly LaurentPoly::monomial(Int c, long e) {
    LaurentPoly p;
    if (c != 0) {
        p.min_exp_ = e;
        p.coeffs_.push_back(std::move(c));
    }
    return p;
}

size_t LaurentPoly::support_size() const {
    size_t n = 0;
    for (const auto& c : coeffs_)
        if (c != 0) ++n;
    return n;
}

const Int& LaurentPoly::coeff(long e) const {
    static const Int zero(0);
    if (is_zero() || e < min_exp_ || e > max_exp()) return zero;
    return coeffs_[(size_t)(e - min_exp_)];
}

void LaurentPoly::trim() {
    size_t lo = 0, hi = coeffs_.size();
    while (hi > lo && coeffs_[hi - 1] == 0) --hi;
    while (lo < hi && coeffs_[lo] == 0) ++lo;
    if (lo == hi) {
        coeffs_.clear();
        min_exp_ = 0;
        return;
    }
    if (lo > 0) coeffs_.erase(coeffs_.begin(), coeffs_.begin() + (long)lo);
    coeffs_.resize(hi - lo);
    min_exp_ += (long)lo;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) { *this = o; return *this; }
    long lo = std::min(min_exp_, o.min_exp_);
    long hi = std::max(max_exp(), o.max_exp());
    std::vector<Int> out((size_t)(hi - lo + 1));
    for (size_t i = 0; i < coeffs_.size(); ++i) out[(size_t)(min_exp_ - lo) + i] = coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) out[(size_t)(o.min_exp_ - lo) + i] += o.coeffs_[i];
    min_exp_ = lo;
    coeffs_ = std::move(out);
    trim();
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    LaurentPoly neg = o;
    for (auto& c : neg.coeffs_) c = -c;
    return *this += neg;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    LaurentPoly r;
    r.min_exp_ = a.min_exp_ + b.min_exp_;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
    // schoolbook; iterate the sparser factor outside
    const LaurentPoly& s = (a.support_size() <= b.support_size()) ? a : b;
    const LaurentPoly& d = (&s == &a) ? b : a;
    for (size_t i = 0; i < s.coeffs_.size(); ++i) {
        if (s.coeffs_[i] == 0) continue;
        for (size_t j = 0; j < d.coeffs_.size(); ++j) {
            if (d.coeffs_[j] == 0) continue;
            r.coeffs_[i + j] += s.coeffs_[i] * d.coeffs_[j];
        }
    }
    r.trim();
    return r;
}

LaurentPoly operator*(const Int& c, const LaurentPoly& a) {
    if (c == 0) return {};
    LaurentPoly r = a;
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.min_exp_ == b.min_exp_ && a.coeffs_ == b.coeffs_;
}

LaurentPoly LaurentPoly::shifted(long e) const {
    LaurentPoly r = *this;
    if (!r.is_zero()) r.min_exp_ += e;
    return r;
}

LaurentPoly LaurentPoly::reciprocal() const {
    if (is_zero()) return {};
    LaurentPoly r;
    r.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
    r.min_exp_ = -max_exp();
    return r;
}

LaurentPoly LaurentPoly::div_exact(const LaurentPoly& d) const {
    if (d.is_zero()) throw DomainError("LaurentPoly: division by zero");
    if (is_zero()) return {};
    LaurentPoly rem = *this, quot;
    const Int& lead = d.coeffs_.back();
    while (!rem.is_zero() && rem.coeffs_.size() >= d.coeffs_.size()) {
        Int q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem.coeffs_.back().get_mpz_t(), lead.get_mpz_t());
        if (r != 0) throw DomainError("LaurentPoly: inexact division (leading coefficient)");
        long sh = rem.max_exp() - d.max_exp();
        LaurentPoly t = monomial(q, sh);
        quot += t;
        rem -= t * d;
    }
    if (!rem.is_zero()) throw DomainError("LaurentPoly: inexact division (nonzero remainder)");
    return quot;
}

Complex LaurentPoly::eval(const Complex& q) const {
    long p = q.prec();
    Complex acc(p);
    if (is_zero()) return acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * q;
        if (*it != 0) acc.re += Real(*it, p);
    }
    if (min_exp_ != 0) acc = acc * pow(q, min_exp_);
    return acc;
}

Int LaurentPoly::eval_one() const {
    Int s(0);
    for (const auto& c : coeffs_) s += c;
    return s;
}

std::string LaurentPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for_each([&](long e, const Int& c) {
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        Int a = ::abs(c);
        if (a != 1 || e == 0) os << a.get_str();
        if (e != 0) {
            if (a != 1) os << "*";
            os << "q";
            if (e != 1) os << "^" << e;
        }
    });
    return os.str();
}

LaurentPoly LaurentPoly::parse_pairs(const std::string& line) {
    LaurentPoly p;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) {
        auto colon = tok.find(':');
        if (colon == std::string::npos)
            throw DataError("LaurentPoly: expected 'exponent:coefficient', got '" + tok + "'");
        try {
            long e = std::stol(tok.substr(0, colon));
            Int c(tok.substr(colon + 1));
            p += monomial(c, e);
        } catch (const std::invalid_argument&) {
            throw DataError("LaurentPoly: malformed pair '" + tok + "'");
        }
    }
    return p;
}

LaurentPoly qpochhammer(long n, long r) {
    if (n < 0) throw DomainError("qpochhammer: n must be >= 0");
    if (r < 1) throw DomainError("qpochhammer: r must be >= 1");
    LaurentPoly p = LaurentPoly::one();
    for (long k = 1; k <= n; ++k)
        p -= p.shifted(k * r);
    return p;
}

Complex eval_root(const LaurentPoly& p, long N, const PrecisionContext& ctx) {
    if (N < 1) throw DomainError("eval_root: N must be >= 1");
    return p.eval(root_of_unity(1, N, ctx.work_bits()));
}

} // namespace qlab
