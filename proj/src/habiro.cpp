#include "qlab/habiro.hpp"

#include <atomic>
#include <sstream>
#include <thread>

#include "qlab/rational.hpp"

namespace qlab {

// ---------------------------------------------------------------------------
// SumProductSpec
// ---------------------------------------------------------------------------

long SumProductSpec::weight() const {
    long w = 0;
    for (auto& [r, cr] : c_r) w += cr;
    return w;
}

void SumProductSpec::validate() const {
    if (eps != 1 && eps != -1) throw DomainError("SumProductSpec: eps must be +-1");
    for (auto& [r, cr] : c_r) {
        if (r < 1) throw DomainError("SumProductSpec: factor index r must be >= 1");
        if (cr < 0) throw DomainError("SumProductSpec: exponent c_r must be >= 0");
    }
}

LaurentPoly SumProductSpec::phi_poly() const {
    LaurentPoly p = LaurentPoly::monomial(eps, c);
    for (auto& [r, cr] : c_r) {
        LaurentPoly f = qpochhammer(1, r); // 1 - q^r
        for (long i = 0; i < cr; ++i) p = p * f;
    }
    return p;
}

Complex SumProductSpec::phi(const Complex& q) const {
    long p = q.prec();
    Complex acc = pow(q, c);
    if (eps < 0) acc = -acc;
    Complex one(p);
    one.re = Real(1l, p);
    for (auto& [r, cr] : c_r) {
        Complex f = one - pow(q, r);
        for (long i = 0; i < cr; ++i) acc = acc * f;
    }
    return acc;
}

Complex SumProductSpec::F(const Real& x, const PrecisionContext& ctx) const {
    return phi(unit_circle(x, ctx.work_bits()));
}

std::string SumProductSpec::str() const {
    std::ostringstream os;
    os << "sp(eps=" << eps << ",c=" << c;
    for (auto& [r, cr] : c_r)
        if (cr) os << ",c" << r << "=" << cr;
    os << ")";
    return os.str();
}

// ---------------------------------------------------------------------------
// HabiroElement construction
// ---------------------------------------------------------------------------

HabiroElement HabiroElement::from_spec(SumProductSpec s, std::string label) {
    s.validate();
    if (s.weight() < 1)
        throw DomainError("HabiroElement: sum over r of c_r must be >= 1 (divergent sum-product)");
    HabiroElement e;
    e.label_ = std::move(label);
    e.spec_ = std::move(s);
    return e;
}

HabiroElement HabiroElement::from_spec_mult(SumProductSpec s, LevelMultiplier m, std::string label) {
    HabiroElement e = from_spec(std::move(s), std::move(label));
    e.mult_ = std::move(m);
    return e;
}

HabiroElement HabiroElement::custom(std::function<LaurentPoly(long)> f_n, std::string label) {
    HabiroElement e;
    e.label_ = std::move(label);
    e.custom_f_ = std::move(f_n);
    return e;
}

LaurentPoly HabiroElement::term(long n) const {
    if (n < 0) throw DomainError("HabiroElement::term: n must be >= 0");
    if (!spec_) return custom_f_(n) * qpochhammer(n);
    LaurentPoly base = LaurentPoly::one();
    // prod_{j<=n} phi(q^j) = eps^n q^{c n(n+1)/2} prod_r (q^r)_n^{c_r}
    base = LaurentPoly::monomial((n % 2 == 0 || spec_->eps > 0) ? 1 : -1,
                                 spec_->c * n * (n + 1) / 2);
    for (auto& [r, cr] : spec_->c_r) {
        LaurentPoly f = qpochhammer(n, r);
        for (long i = 0; i < cr; ++i) base = base * f;
    }
    if (mult_) base = mult_->poly(n) * base;
    return base;
}

LaurentPoly HabiroElement::f(long n) const {
    if (!spec_) return custom_f_(n);
    return term(n).div_exact(qpochhammer(n));
}

// ---------------------------------------------------------------------------
// Evaluation at roots of unity
// ---------------------------------------------------------------------------

Complex habiro_eval(const HabiroElement& f, long N, const PrecisionContext& ctx) {
    if (N < 1) throw DomainError("habiro_eval: N must be >= 1");
    long wp = ctx.work_bits();
    Complex q = root_of_unity(1, N, wp);

    auto mult_value = [&](long n) -> Complex {
        const auto& m = *f.mult();
        if (m.eval) return m.eval(n, N, ctx);
        return m.poly(n).eval(q);
    };

    if (f.spec_backed()) {
        Complex total = f.mult() ? mult_value(0) : Complex(Real(1l, wp));
        Complex prod(Real(1l, wp));
        Complex qn(Real(1l, wp));
        for (long n = 1; n < N; ++n) {
            qn = qn * q;
            prod = prod * f.spec()->phi(qn);
            total += f.mult() ? mult_value(n) * prod : prod;
        }
        return total;
    }
    Complex total(wp);
    for (long n = 0; n < N; ++n) total += f.term(n).eval(q);
    return total;
}

std::vector<Complex> habiro_np_coeffs(const HabiroElement& f, long Nmax,
                                      const PrecisionContext& ctx, int threads) {
    if (Nmax < 1) throw DomainError("habiro_np_coeffs: Nmax must be >= 1");
    std::vector<Complex> out((size_t)Nmax + 1, Complex(ctx.work_bits()));
    out[0].re = Real(1l, ctx.work_bits());
    if (threads <= 1) {
        for (long n = 1; n <= Nmax; ++n) out[(size_t)n] = habiro_eval(f, n, ctx);
        return out;
    }
    std::vector<std::thread> pool;
    std::atomic<long> next(1);
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&]() {
            for (long n = next.fetch_add(1); n <= Nmax; n = next.fetch_add(1))
                out[(size_t)n] = habiro_eval(f, n, ctx);
        });
    }
    for (auto& th : pool) th.join();
    return out;
}

// ---------------------------------------------------------------------------
// Taylor expansion at q = 1 (exact)
// ---------------------------------------------------------------------------
//
// Series are carried in Hurwitz form sum_j c_j h^j / j! with integer c_j, so
// products are binomial convolutions over Z and no rational arithmetic happens
// until the final division by j!.

namespace {

class BinomTable {
  public:
    explicit BinomTable(long n) {
        rows_.resize((size_t)n + 1);
        for (long i = 0; i <= n; ++i) {
            rows_[(size_t)i].resize((size_t)i + 1);
            rows_[(size_t)i][0] = 1;
            rows_[(size_t)i][(size_t)i] = 1;
            for (long k = 1; k < i; ++k)
                rows_[(size_t)i][(size_t)k] =
                    rows_[(size_t)i - 1][(size_t)k - 1] + rows_[(size_t)i - 1][(size_t)k];
        }
    }
    const Int& at(long n, long k) const { return rows_[(size_t)n][(size_t)k]; }

  private:
    std::vector<std::vector<Int>> rows_;
};

// sum_j c[j] h^(val+j)/(val+j)!, truncated at total degree K
struct Egf {
    long val = 0;
    std::vector<Int> c;

    void trim(long K) {
        while (!c.empty() && c.front() == 0) {
            c.erase(c.begin());
            ++val;
        }
        if (val > K) {
            c.clear();
            val = K + 1;
            return;
        }
        if ((long)c.size() > K - val + 1) c.resize((size_t)(K - val + 1));
    }
    bool is_zero() const { return c.empty(); }
};

Egf egf_one(long K) {
    Egf e;
    e.val = 0;
    e.c.assign((size_t)K + 1, Int(0));
    e.c[0] = 1;
    return e;
}

// p(e^h): coefficient at degree j is sum_k coeff_k * k^j
Egf egf_from_poly(const LaurentPoly& p, long K) {
    Egf e;
    e.val = 0;
    e.c.assign((size_t)K + 1, Int(0));
    p.for_each([&](long k, const Int& cf) {
        Int pw(1);
        for (long j = 0; j <= K; ++j) {
            e.c[(size_t)j] += cf * pw;
            pw *= k;
        }
    });
    e.trim(K);
    return e;
}

Egf egf_mul(const Egf& a, const Egf& b, long K, const BinomTable& bt) {
    Egf r;
    r.val = a.val + b.val;
    if (a.is_zero() || b.is_zero() || r.val > K) {
        r.val = K + 1;
        return r;
    }
    long len = K - r.val + 1;
    r.c.assign((size_t)len, Int(0));
    long na = std::min<long>((long)a.c.size(), len);
    for (long j = 0; j < na; ++j) {
        if (a.c[(size_t)j] == 0) continue;
        long nb = std::min<long>((long)b.c.size(), len - j);
        for (long k = 0; k < nb; ++k) {
            if (b.c[(size_t)k] == 0) continue;
            long deg = r.val + j + k;
            r.c[(size_t)(j + k)] += bt.at(deg, a.val + j) * a.c[(size_t)j] * b.c[(size_t)k];
        }
    }
    r.trim(K);
    return r;
}

void egf_add_into(Egf& acc, const Egf& t, long K) {
    if (t.is_zero()) return;
    if (acc.is_zero()) {
        acc = t;
        return;
    }
    if (t.val < acc.val) {
        long shift = acc.val - t.val;
        acc.c.insert(acc.c.begin(), (size_t)shift, Int(0));
        acc.val = t.val;
    }
    long off = t.val - acc.val;
    if ((long)acc.c.size() < off + (long)t.c.size())
        acc.c.resize((size_t)(off + (long)t.c.size()), Int(0));
    for (size_t i = 0; i < t.c.size(); ++i) acc.c[(size_t)off + i] += t.c[i];
    acc.trim(K);
}

// phi(e^{n h}) as a Hurwitz series
Egf phi_egf(const SumProductSpec& s, long n, long K, const BinomTable& bt) {
    Egf e;
    e.val = 0;
    e.c.assign((size_t)K + 1, Int(0));
    // eps * e^{c n h}
    {
        Int pw(1);
        long m = s.c * n;
        for (long j = 0; j <= K; ++j) {
            e.c[(size_t)j] = (s.eps > 0) ? pw : -pw;
            pw *= m;
        }
    }
    for (auto& [r, cr] : s.c_r) {
        if (cr == 0) continue;
        Egf f; // 1 - e^{r n h}: valuation 1
        f.val = 1;
        f.c.assign((size_t)K, Int(0));
        Int pw(r * n);
        for (long j = 0; j < K; ++j) {
            f.c[(size_t)j] = -pw;
            pw *= r * n;
        }
        for (long i = 0; i < cr; ++i) e = egf_mul(e, f, K, bt);
    }
    e.trim(K);
    return e;
}

} // namespace

SeriesQ habiro_taylor1(const HabiroElement& f, long K) {
    if (K < 0) throw DomainError("habiro_taylor1: K must be >= 0");
    BinomTable bt(K + 1);
    Egf total;

    if (f.spec_backed()) {
        total = f.mult() ? egf_from_poly(f.mult()->poly(0), K) : egf_one(K);
        Egf prod = egf_one(K);
        for (long n = 1; n <= K; ++n) {
            prod = egf_mul(prod, phi_egf(*f.spec(), n, K, bt), K, bt);
            if (prod.is_zero() || prod.val > K) break;
            if (f.mult())
                egf_add_into(total, egf_mul(prod, egf_from_poly(f.mult()->poly(n), K), K, bt), K);
            else
                egf_add_into(total, prod, K);
        }
    } else {
        for (long n = 0; n <= K; ++n)
            egf_add_into(total, egf_from_poly(f.term(n), K), K);
    }

    std::vector<Rat> a((size_t)K + 1, Rat(0));
    for (long j = 0; j <= K; ++j) {
        long idx = j - total.val;
        if (idx < 0 || idx >= (long)total.c.size()) continue;
        a[(size_t)j] = Rat(total.c[(size_t)idx]) / Rat(factorial(j));
    }
    return SeriesQ(Var::InvX, std::move(a));
}

} // namespace qlab
