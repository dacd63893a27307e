#include "qlab/multisum.hpp"

#include <functional>
#include <optional>
#include <string>

#include "qlab/errors.hpp"

namespace qlab {

long LinearForm::eval(long n, const std::vector<long>& k) const {
    long v = n_coef * n;
    for (size_t i = 0; i < k_coef.size() && i < k.size(); ++i) v += k_coef[i] * k[i];
    return v;
}

void BalancedTerm::validate() const {
    for (auto& [A, eps] : forms) {
        if (eps != 1 && eps != -1) throw DomainError("BalancedTerm: eps_j must be +-1");
        if (A.k_coef.size() != rank())
            throw DomainError("BalancedTerm: form arity does not match the number of k variables");
    }
}

bool balanced_check(const BalancedTerm& t) {
    t.validate();
    long n_sum = 0;
    std::vector<long> k_sum(t.rank(), 0);
    for (auto& [A, eps] : t.forms) {
        n_sum += eps * A.n_coef;
        for (size_t i = 0; i < t.rank(); ++i) k_sum[i] += eps * A.k_coef[i];
    }
    if (n_sum != 0) return false;
    for (long v : k_sum)
        if (v != 0) return false;
    return true;
}

namespace {

// rows c[0] + sum_{i>=1} c[i] x_i >= 0, exact rational Fourier-Motzkin
using Row = std::vector<Rat>;
using System = std::vector<Row>;

// eliminate x_1 (index 1), producing a system over the remaining variables
System eliminate_first(const System& sys) {
    System lower, upper, rest;
    for (const Row& r : sys) {
        if (r[1] > 0) lower.push_back(r);       // x_1 >= -(...)/r[1]
        else if (r[1] < 0) upper.push_back(r);  // x_1 <= ...
        else rest.push_back(r);
    }
    System out;
    for (const Row& r : rest) {
        Row s;
        s.push_back(r[0]);
        for (size_t i = 2; i < r.size(); ++i) s.push_back(r[i]);
        out.push_back(std::move(s));
    }
    for (const Row& lo : lower) {
        for (const Row& up : upper) {
            // combine lo (coef>0) and up (coef<0): coef_up*lo - coef_lo*up scaled
            Row s;
            Rat a = lo[1], b = -up[1];
            s.push_back(b * lo[0] + a * up[0]);
            for (size_t i = 2; i < lo.size(); ++i) s.push_back(b * lo[i] + a * up[i]);
            out.push_back(std::move(s));
        }
    }
    return out;
}

bool feasible(System sys) {
    size_t vars = sys.empty() ? 0 : sys[0].size() - 1;
    for (size_t v = 0; v < vars; ++v) sys = eliminate_first(sys);
    for (const Row& r : sys)
        if (r[0] < 0) return false;
    return true;
}

// interval of x_1 after eliminating all later variables; nullopt side = unbounded
struct Interval {
    std::optional<Rat> lo, hi;
    bool empty = false;
};

Interval first_var_interval(System sys) {
    size_t vars = sys.empty() ? 0 : sys[0].size() - 1;
    // eliminate x_2..x_vars, keeping x_1: rotate x_1 to the back then eliminate fronts
    // simpler: repeatedly eliminate variable 2 (index 2) until only x_1 remains
    while (vars > 1) {
        System tmp;
        for (Row& r : sys) {
            // swap columns 1 and vars (move x_1 out of the way of eliminate_first)
            std::swap(r[1], r[vars]);
        }
        sys = eliminate_first(sys);
        vars -= 1;
        for (Row& r : sys) std::swap(r[1], r[vars]); // swap back into slot 1
        if (vars == 1) break;
    }
    Interval iv;
    for (const Row& r : sys) {
        if (r.size() < 2 || r[1] == 0) {
            if (r[0] < 0) iv.empty = true;
            continue;
        }
        Rat bound = -r[0] / r[1];
        if (r[1] > 0) {
            if (!iv.lo || bound > *iv.lo) iv.lo = bound;
        } else {
            if (!iv.hi || bound < *iv.hi) iv.hi = bound;
        }
    }
    if (iv.lo && iv.hi && *iv.lo > *iv.hi) iv.empty = true;
    return iv;
}

long ceil_rat(const Rat& q) {
    Int z;
    mpz_cdiv_q(z.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return z.get_si();
}
long floor_rat(const Rat& q) {
    Int z;
    mpz_fdiv_q(z.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return z.get_si();
}

Rat rat_pow_signed(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    if (base == 0) {
        if (e > 0) return Rat(0);
        throw DomainError("multisum: C_i = 0 raised to a negative power");
    }
    Rat out;
    Int num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), (unsigned long)std::abs(e));
    mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), (unsigned long)std::abs(e));
    out = (e > 0) ? Rat(num, den) : Rat(den, num);
    out.canonicalize();
    return out;
}

void enumerate(const System& sys, std::vector<long>& k, size_t depth, size_t rank,
               const std::function<void(const std::vector<long>&)>& emit) {
    if (depth == rank) {
        for (const Row& r : sys)
            if (r[0] < 0) return;
        emit(k);
        return;
    }
    Interval iv = first_var_interval(sys);
    if (iv.empty) return;
    if (!iv.lo || !iv.hi)
        throw DomainError("multisum: internal enumeration hit an unbounded interval");
    for (long v = ceil_rat(*iv.lo); v <= floor_rat(*iv.hi); ++v) {
        System sub;
        sub.reserve(sys.size());
        for (const Row& r : sys) {
            Row s;
            s.push_back(r[0] + r[1] * v);
            for (size_t i = 2; i < r.size(); ++i) s.push_back(r[i]);
            sub.push_back(std::move(s));
        }
        k[depth] = v;
        enumerate(sub, k, depth + 1, rank, emit);
    }
    k[depth] = 0;
}

} // namespace

Rat multisum(const BalancedTerm& t, long n) {
    t.validate();
    if (n < 0) throw DomainError("multisum: n must be >= 0");
    size_t r = t.rank();

    // cone pointedness: the homogeneous system must admit no nonzero ray
    for (size_t i = 0; i < r; ++i) {
        for (int sgn : {+1, -1}) {
            System sys;
            for (auto& [A, eps] : t.forms) {
                Row row(r + 1, Rat(0));
                for (size_t j = 0; j < r; ++j) row[j + 1] = Rat(A.k_coef[j]);
                sys.push_back(std::move(row));
            }
            Row dir(r + 1, Rat(0));
            dir[0] = Rat(-1); // sgn*x_i - 1 >= 0
            dir[i + 1] = Rat(sgn);
            sys.push_back(std::move(dir));
            if (feasible(sys))
                throw DomainError("multisum: lattice set unbounded along " +
                                  std::string(sgn > 0 ? "+" : "-") + "k_" + std::to_string(i + 1));
        }
    }

    System sys;
    for (auto& [A, eps] : t.forms) {
        Row row(r + 1, Rat(0));
        row[0] = Rat(A.n_coef * n);
        for (size_t j = 0; j < r; ++j) row[j + 1] = Rat(A.k_coef[j]);
        sys.push_back(std::move(row));
    }

    Rat total(0);
    Rat c0n = rat_pow_signed(t.C0, n);
    std::vector<long> k(r, 0);
    auto emit = [&](const std::vector<long>& kv) {
        Rat term = c0n;
        for (size_t i = 0; i < r; ++i) term *= rat_pow_signed(t.C[i], kv[i]);
        for (auto& [A, eps] : t.forms) {
            long a = A.eval(n, kv);
            if (a < 0) return; // the inequality system keeps every A_j >= 0
            if (eps > 0) term *= Rat(factorial(a));
            else term /= Rat(factorial(a));
        }
        total += term;
    };
    if (r == 0) {
        emit(k);
        return total;
    }
    enumerate(sys, k, 0, r, emit);
    return total;
}

BalancedTerm binomial_term() {
    BalancedTerm t;
    t.C = {Rat(1)};
    t.forms = {
        {{1, {0}}, +1},  // n!
        {{0, {1}}, -1},  // 1/k!
        {{1, {-1}}, -1}, // 1/(n-k)!
    };
    return t;
}

BalancedTerm apery_term() {
    BalancedTerm t;
    t.C = {Rat(1)};
    t.forms = {
        {{1, {1}}, +1},  {{1, {1}}, +1},   // (n+k)!^2
        {{0, {1}}, -1},  {{0, {1}}, -1},   // 1/k!^4
        {{0, {1}}, -1},  {{0, {1}}, -1},
        {{1, {-1}}, -1}, {{1, {-1}}, -1},  // 1/(n-k)!^2
    };
    return t;
}

} // namespace qlab
