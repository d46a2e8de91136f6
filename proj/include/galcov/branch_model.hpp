#pragma once

#include <string>
#include <vector>

#include "galcov/exact_arith.hpp"

namespace galcov {

// Branch-curve data of a generic projection f: X -> CP^2 of degree n.
// m is the degree of the branch curve S, mu the number of branch points
// (equivalently deg S*), rho the number of cusps and d the number of nodes.
// The struct itself may hold inconsistent values; validate_branch reports
// every violated identity so that suspect published data can still be fed
// through the formulas for comparison.
struct BranchData {
    BigInt n;
    BigInt m;
    BigInt mu;
    BigInt rho;
    BigInt d;

    bool operator==(const BranchData&) const = default;
};

// Intrinsic description of the embedded surface: c1^2 = K^2, c2 = e(X),
// deg_n = E^2 and ek = E.K for the hyperplane divisor E and canonical
// divisor K.
struct SurfaceIntrinsics {
    BigInt c1sq;
    BigInt c2;
    BigInt deg_n;
    BigInt ek;

    bool operator==(const SurfaceIntrinsics&) const = default;
};

struct Violation {
    std::string identity;
    BigInt expected;
    BigInt actual;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
};

// Degree of the dual curve: mu = m^2 - m - 2d - 3rho. May come out negative
// on inconsistent inputs; the validator catches that.
inline BigInt dual_degree(const BigInt& m, const BigInt& d, const BigInt& rho) {
    return m * m - m - 2 * d - 3 * rho;
}

// Genus of the non-singular model of S: (m-1)(m-2)/2 - d - rho.
inline Rational genus_of_model(const BigInt& m, const BigInt& d, const BigInt& rho) {
    return Rational((m - 1) * (m - 2), 2) - d - rho;
}

inline ValidationReport validate_branch(const BranchData& x) {
    ValidationReport report;
    const BigInt expected_mu = dual_degree(x.m, x.d, x.rho);
    if (expected_mu != x.mu) {
        report.violations.push_back({"dual-degree", expected_mu, x.mu});
    }
    const Rational g = genus_of_model(x.m, x.d, x.rho);
    // (m-1)(m-2) is even for integer m, so g is an integer; only its sign
    // can go wrong.
    if (numerator(g) < 0) {
        report.violations.push_back({"genus-nonnegative", 0, numerator(g) / denominator(g)});
    }
    if (x.n < 1) {
        report.violations.push_back({"positive(n)", 1, x.n});
    }
    const std::pair<const char*, const BigInt*> counts[] = {
        {"nonnegative(m)", &x.m},
        {"nonnegative(mu)", &x.mu},
        {"nonnegative(rho)", &x.rho},
        {"nonnegative(d)", &x.d},
    };
    for (const auto& [name, value] : counts) {
        if (*value < 0) {
            report.violations.push_back({name, 0, *value});
        }
    }
    return report;
}

// Inverts the identity chain that ties intrinsic surface data to branch data:
//
//   m     = E.R         = E.K + 3 E^2
//   mu    = c2 + n + 2 e(E),  e(E) = -E.(E+K)
//   g(R)  = 1 + R(R+K)/2,     R = K + 3E
//
// then (d, rho) is the unique solution of
//
//   2d + 3rho = m(m-1) - mu
//    d +  rho = (m-1)(m-2)/2 - g(R).
//
// Non-integral or negative solutions are hard errors: the identities are
// exact integer relations, so failure means the input is not realizable as
// a generic projection.
inline BranchData derive_branch(const SurfaceIntrinsics& s) {
    if (s.deg_n < 1) {
        throw DegenerateSurface("deg X = " + s.deg_n.str() + " is not positive");
    }
    const BigInt n = s.deg_n;
    const BigInt m = s.ek + 3 * s.deg_n;
    if (m < 1) {
        throw DegenerateSurface("derived branch degree m = " + m.str() + " is not positive");
    }
    const BigInt mu = s.c2 + 3 * s.deg_n + 2 * s.ek;
    const BigInt two_g = 2 + 2 * s.c1sq + 9 * s.ek + 9 * s.deg_n;
    if (two_g % 2 != 0) {
        throw NonIntegralSolution("g(R) = " + Rational(two_g, 2).str() + " is not an integer");
    }
    const BigInt g = two_g / 2;
    if (g < 0) {
        throw NonIntegralSolution("g(R) = " + g.str() + " is negative");
    }
    if (mu < 0) {
        throw NonIntegralSolution("mu = " + mu.str() + " is negative");
    }
    const BigInt rho = 2 * (m - 1) - mu + 2 * g;
    if (rho < 0) {
        throw NonIntegralSolution("rho = " + rho.str() + " is not a non-negative integer");
    }
    const BigInt d = (m - 1) * (m - 2) / 2 - g - rho;
    if (d < 0) {
        throw NonIntegralSolution("d = " + d.str() + " is not a non-negative integer");
    }
    return BranchData{n, m, mu, rho, d};
}

} // namespace galcov
