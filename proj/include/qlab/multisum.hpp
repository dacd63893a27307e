#pragma once

#include <utility>
#include <vector>

#include "qlab/rational.hpp"

namespace qlab {

/// Integral linear form a0*n + sum_i a_i*k_i in the variables (n, k_1..k_r).
struct LinearForm {
    long n_coef = 0;
    std::vector<long> k_coef;

    long eval(long n, const std::vector<long>& k) const;
};

/// Balanced hypergeometric term
///   t_{n,k} = C0^n prod_i C_i^{k_i} prod_j A_j(n,k)!^{eps_j}.
struct BalancedTerm {
    Rat C0 = Rat(1);
    std::vector<Rat> C;                             // one per k_i
    std::vector<std::pair<LinearForm, int>> forms;  // (A_j, eps_j)

    size_t rank() const { return C.size(); }
    void validate() const;
};

/// True iff sum_j eps_j A_j is the zero form.
bool balanced_check(const BalancedTerm& t);

/// sum over { k in Z^r : A_j(n,k) >= 0 for all j } of t_{n,k}, exactly.
/// Throws DomainError naming an unbounded direction when the lattice set is
/// infinite.
Rat multisum(const BalancedTerm& t, long n);

/// Ready-made terms used across the test and acceptance suites.
BalancedTerm binomial_term();  // n! / (k! (n-k)!)  ->  2^n
BalancedTerm apery_term();     // C(n,k)^2 C(n+k,k)^2

} // namespace qlab
