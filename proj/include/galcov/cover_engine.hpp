#pragma once

#include "galcov/branch_model.hpp"

// Chern invariants of the k-th Galois cover X_k of a generic projection,
// computed two independent ways: the closed forms, and a recursive engine
// built from the per-cover branch-locus sequences. The recursion is the
// ground truth whenever the two disagree.

namespace galcov {

struct ChernPair {
    BigInt c1sq;
    BigInt c2;

    bool operator==(const ChernPair&) const = default;
};

// Closed-form and recursive evaluations side by side.
struct CrossCheckedChern {
    ChernPair closed;
    ChernPair oracle;
    bool agree = false;
};

// Degree, node and cusp counts of the branch curve S_k.
struct BranchCounts {
    BigInt m;
    BigInt d;
    BigInt rho;
};

// Everything attached to cover index k: the S_k counts, the new branch
// points mu'_k, and the ramification pairings E_k.T'_k and S_{k+1}.T'_k.
struct CoverSequences {
    BigInt k;
    BigInt m_k;
    BigInt d_k;
    BigInt rho_k;
    BigInt mu_prime_k;
    BigInt e_dot_t;
    BigInt s_dot_t;
};

namespace detail {

inline void check_k(const BigInt& k, const BigInt& hi) {
    if (k < 1 || k > hi) {
        throw InvalidK("cover index k = " + k.str() + " outside [1, " + hi.str() + "]");
    }
}

} // namespace detail

// deg g_k = n(n-1)...(n-k+1), the degree of X_k over CP^2.
inline BigInt deg_g(const BigInt& n, const BigInt& k) {
    detail::check_k(k, n);
    return range_product(n - k + 1, n);
}

// X_n is isomorphic to X_{n-1}; k = n is an alias for k = n-1.
inline BigInt effective_k(const BigInt& n, const BigInt& k) {
    return k == n ? BigInt(n - 1) : k;
}

// Degree / node count / cusp count of S_k. The k = 1 values are the input
// data itself; the k >= 2 products hit zero or empty ranges at the
// boundaries, which is intended (e.g. d_2 = 0 when n = 4).
inline BranchCounts branch_locus_at(const BranchData& x, const BigInt& k) {
    detail::check_k(k, x.n - 1);
    if (k == 1) {
        return {x.m, x.d, x.rho};
    }
    return {range_product(x.n - k, x.n - 2) * x.m,
            range_product(x.n - k - 2, x.n - 4) * x.d,
            range_product(x.n - k - 1, x.n - 3) * x.rho};
}

// Branch points of S_k that do not come from S_{k-1}, closed form.
// k = 2 has its own formula; the general form starts at k = 3 (where the
// d coefficient collapses to (k-1)(2n-k-4) = 2(2n-7)).
inline BigInt mu_prime(const BranchData& x, const BigInt& k) {
    detail::check_k(k, x.n - 1);
    if (k == 1) {
        return x.mu;
    }
    if (k == 2) {
        return (x.n - 2) * x.mu + x.rho + 2 * x.d;
    }
    return range_product(x.n - k, x.n - 2) * x.mu
         + range_product(x.n - k, x.n - 3) * (k - 1) * x.rho
         + range_product(x.n - k, x.n - 4) * (k - 1) * (2 * x.n - k - 4) * x.d;
}

// Same quantity through the recursion mu'_j = (n-j) mu'_{j-1} + rho_{j-1} + 2 d_{j-1}.
inline BigInt mu_prime_oracle(const BranchData& x, const BigInt& k) {
    detail::check_k(k, x.n - 1);
    BigInt value = x.mu;
    for (BigInt j = 2; j <= k; ++j) {
        const BranchCounts prev = branch_locus_at(x, j - 1);
        value = (x.n - j) * value + prev.rho + 2 * prev.d;
    }
    return value;
}

// E_k.T'_k: m at k = 1, else m/2 [(n-k+1)...(n-2)] {(2n-1)k - k^2}.
// k(2n-1-k) is always even, so the half clears for any integer input.
inline BigInt hyperplane_dot_ram(const BranchData& x, const BigInt& k) {
    detail::check_k(k, x.n - 1);
    if (k == 1) {
        return x.m;
    }
    const Rational v = Rational(x.m, 2) * range_product(x.n - k + 1, x.n - 2)
                     * ((2 * x.n - 1) * k - k * k);
    return as_integer(v, "E_k.T'_k");
}

// a_k = S_{k+1}.T'_k, closed form.
inline BigInt branch_dot_ram(const BranchData& x, const BigInt& k) {
    detail::check_k(k, x.n - 1);
    if (k == 1) {
        return 2 * x.rho + 2 * x.d;
    }
    return 2 * range_product(x.n - k - 1, x.n - 3) * k * x.rho
         + range_product(x.n - k - 1, x.n - 4) * (2 * x.n - k - 5) * k * x.d;
}

// a_k through the recursion a_j = (n-j-1) a_{j-1} + 2 rho_j + 2 d_j.
inline BigInt branch_dot_ram_oracle(const BranchData& x, const BigInt& k) {
    detail::check_k(k, x.n - 1);
    BigInt a = 2 * x.rho + 2 * x.d;
    for (BigInt j = 2; j <= k; ++j) {
        const BranchCounts at = branch_locus_at(x, j);
        a = (x.n - j - 1) * a + 2 * at.rho + 2 * at.d;
    }
    return a;
}

// c1^2(X_k) closed form.
inline BigInt c1sq_closed(const BranchData& x, const BigInt& k) {
    detail::check_k(k, x.n - 1);
    const Rational half_m_minus_6 = Rational(x.m, 2) - 6;
    Rational v;
    if (k == 1) {
        v = 9 * x.n + half_m_minus_6 * x.m - x.rho - x.d;
    } else {
        v = 9 * range_product(x.n - k + 1, x.n)
          + Rational(1, 2) * range_product(x.n - k + 1, x.n - 2)
                * ((2 * x.n - k - 1) * k) * half_m_minus_6 * x.m
          - range_product(x.n - k - 1, x.n - 3) * k * x.rho
          - Rational(1, 2) * range_product(x.n - k - 1, x.n - 4)
                * ((2 * x.n - k - 5) * k) * x.d;
    }
    return as_integer(v, "c1^2(X_" + k.str() + ")");
}

// c2(X_k) closed form. k = 1, 2, 3 have dedicated formulas; the general
// form is only valid from k = 4 on (it does not specialize downward).
inline BigInt c2_closed(const BranchData& x, const BigInt& k) {
    detail::check_k(k, x.n - 1);
    const BigInt& n = x.n;
    Rational v;
    if (k == 1) {
        v = 3 * n - 2 * x.m + x.mu;
    } else if (k == 2) {
        v = 3 * n * (n - 1) - 2 * (2 * n - 3) * x.m + (2 * n - 3) * x.mu + x.rho + 2 * x.d;
    } else if (k == 3) {
        v = 3 * n * (n - 1) * (n - 2) - 3 * (2 * n - 4) * (n - 2) * x.m
          + Rational(3, 2) * ((2 * n - 4) * (n - 2)) * x.mu
          + 2 * (3 * n - 9) * x.d + (3 * n - 8) * x.rho;
    } else {
        v = 3 * range_product(n - k + 1, n)
          - range_product(n - k + 1, n - 2) * (2 * n - k - 1) * k * x.m
          + Rational(1, 2) * range_product(n - k + 1, n - 2) * ((2 * n - k - 1) * k) * x.mu
          + range_product(n - k + 1, n - 3) * ((k - 1) * k)
                * (Rational(n, 2) - Rational(k + 1, 3)) * x.rho
          + range_product(n - k + 1, n - 4) * Rational(k * (k + 1), 4)
                * ((k + 6) * (k - 1) + 4 * n * (n - k - 1)) * x.d
          + range_product(n - k + 1, n - 4) * (4 * n * k - 2 * n * n * k) * x.d;
    }
    return as_integer(v, "c2(X_" + k.str() + ")");
}

// c1^2(X_k) from K_{X_k} = -3E_k + T'_k:
//   c1^2 = 9 deg g_k - 6 E_k.T'_k + (m/2) E_k.T'_k - (1/2) S_{k+1}.T'_k
// with the pairing a_k supplied by its recursion.
inline BigInt c1sq_oracle(const BranchData& x, const BigInt& k) {
    detail::check_k(k, x.n - 1);
    const BigInt e = hyperplane_dot_ram(x, k);
    const BigInt a = branch_dot_ram_oracle(x, k);
    const Rational v = 9 * deg_g(x.n, k) - 6 * e + Rational(x.m, 2) * e - Rational(a, 2);
    return as_integer(v, "c1^2 recursion (X_" + k.str() + ")");
}

// c2(X_k) from the stratification recursion
//   c2(X_j) = (n-j+1) c2(X_{j-1}) - 2 m_j + mu'_j,
// based at c2(X_1) = 3n - 2m + mu (X_0 = CP^2, c2 = 3).
inline BigInt c2_oracle(const BranchData& x, const BigInt& k) {
    detail::check_k(k, x.n - 1);
    BigInt c2 = 3 * x.n - 2 * x.m + x.mu;
    BigInt mu_p = x.mu;
    for (BigInt j = 2; j <= k; ++j) {
        const BranchCounts prev = branch_locus_at(x, j - 1);
        mu_p = (x.n - j) * mu_p + prev.rho + 2 * prev.d;
        c2 = (x.n - j + 1) * c2 - 2 * branch_locus_at(x, j).m + mu_p;
    }
    return c2;
}

inline CoverSequences cover_sequences(const BranchData& x, const BigInt& k) {
    const BranchCounts at = branch_locus_at(x, k);
    return {k, at.m, at.d, at.rho, mu_prime(x, k),
            hyperplane_dot_ram(x, k), branch_dot_ram(x, k)};
}

// Both evaluations of (c1^2, c2) for X_k, 1 <= k <= n, with k = n aliased
// to k = n-1. Disagreement is never expected on valid data.
inline CrossCheckedChern chern(const BranchData& x, const BigInt& k) {
    detail::check_k(k, x.n);
    const BigInt kk = effective_k(x.n, k);
    CrossCheckedChern result;
    result.closed = {c1sq_closed(x, kk), c2_closed(x, kk)};
    result.oracle = {c1sq_oracle(x, kk), c2_oracle(x, kk)};
    result.agree = result.closed == result.oracle;
    return result;
}

// Full Galois cover X_Gal = X_{n-1} ~ X_n:
//   c1^2 = n!/4 (m-6)^2
//   c2   = n! (3 - m + d/4 + mu/2 + rho/6)
inline ChernPair galois_chern(const BranchData& x) {
    const BigInt fct = factorial(x.n);
    const Rational c1 = Rational(fct, 4) * (x.m - 6) * (x.m - 6);
    const Rational c2 = fct * (3 - x.m + Rational(x.d, 4) + Rational(x.mu, 2) + Rational(x.rho, 6));
    return {as_integer(c1, "c1^2(X_Gal)"), as_integer(c2, "c2(X_Gal)")};
}

// The same full-Galois invariants directly from intrinsic surface data.
inline ChernPair corollary_n(const SurfaceIntrinsics& s) {
    const BigInt& n = s.deg_n;
    const BigInt& ek = s.ek;
    const BigInt fct = factorial(n);
    const Rational c1 = Rational(fct, 4)
        * (ek * ek + 6 * n * ek + 9 * n * n - 12 * ek - 36 * n + 36);
    const Rational c2 = Rational(fct, 24)
        * (72 - 10 * s.c1sq - 54 * ek - 114 * n + 27 * n * n + 14 * s.c2
           + 3 * ek * ek + 18 * n * ek);
    return {as_integer(c1, "c1^2(X_n)"), as_integer(c2, "c2(X_n)")};
}

} // namespace galcov
