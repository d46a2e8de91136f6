#pragma once

#include <optional>
#include <string>
#include <vector>

#include "galcov/branch_model.hpp"

// Closed-form branch data for the three stock families, with intrinsic
// surface data attached where it is determined.

namespace galcov {

struct FamilyInstance {
    std::string label;
    BranchData branch;
    std::optional<SurfaceIntrinsics> intrinsics;
};

// Veronese embedding of order b (n = b^2). The node-count factor
// 3b^3 - 3b^2 - 14b + 16 vanishes exactly at b = 2.
inline FamilyInstance veronese(const BigInt& b) {
    if (b < 2) {
        throw InvalidParameter("veronese order b must be >= 2, got " + b.str());
    }
    const BigInt n = b * b;
    const BigInt m = 3 * b * (b - 1);
    const BigInt mu = 3 * (b - 1) * (b - 1);
    const BigInt rho = 3 * (b - 1) * (4 * b - 5);
    const BigInt d = as_integer(Rational(3 * (b - 1) * (3 * b * b * b - 3 * b * b - 14 * b + 16), 2),
                                "veronese node count d");
    if (d < 0) {
        throw InvalidParameter("veronese node count d = " + d.str() + " is negative");
    }
    // E = b.(line), K = -3.(line) on the underlying CP^2.
    const SurfaceIntrinsics intr{9, 3, n, -3 * b};
    return {"veronese(b=" + b.str() + ")", BranchData{n, m, mu, rho, d}, intr};
}

// Hirzebruch surface F_t embedded by |a.l + b.C+|, a >= 1, b >= 1, t >= 0.
// d is recovered from the dual-degree identity; E.K = -2a - 2b - bt comes
// from K = -2C+ + (t-2)l and matches the printed m, mu through the
// intrinsic identity chain.
inline FamilyInstance hirzebruch(const BigInt& t, const BigInt& a, const BigInt& b) {
    if (t < 0 || a < 1 || b < 1) {
        throw InvalidParameter("hirzebruch parameters require t >= 0, a >= 1, b >= 1, got (t="
                               + t.str() + ", a=" + a.str() + ", b=" + b.str() + ")");
    }
    const BigInt n = 2 * a * b + t * b * b;
    const BigInt m = 6 * a * b - 2 * a - 2 * b + t * (3 * b * b - b);
    const BigInt mu = 6 * a * b - 4 * a - 4 * b + 4 + t * (3 * b * b - 2 * b);
    const BigInt rho = 24 * a * b - 18 * a - 18 * b + 12 + t * (12 * b * b - 9 * b);
    const BigInt twice_d = m * m - m - mu - 3 * rho;
    if (twice_d < 0 || twice_d % 2 != 0) {
        throw NonIntegralSolution("hirzebruch node count 2d = " + twice_d.str()
                                  + " is not an even non-negative integer");
    }
    const SurfaceIntrinsics intr{8, 4, n, -2 * a - 2 * b - b * t};
    return {"hirzebruch(t=" + t.str() + ",a=" + a.str() + ",b=" + b.str() + ")",
            BranchData{n, m, mu, rho, twice_d / 2}, intr};
}

inline FamilyInstance k3() {
    return {"k3", BranchData{4, 12, 36, 24, 12}, SurfaceIntrinsics{0, 24, 4, 0}};
}

inline std::vector<FamilyInstance> veronese_range(const BigInt& b_min, const BigInt& b_max) {
    if (b_max < b_min) {
        throw InvalidParameter("empty veronese range b = [" + b_min.str() + ", " + b_max.str() + "]");
    }
    std::vector<FamilyInstance> out;
    for (BigInt b = b_min; b <= b_max; ++b) {
        out.push_back(veronese(b));
    }
    return out;
}

inline std::vector<FamilyInstance> hirzebruch_range(const BigInt& t,
                                                    const BigInt& a_min, const BigInt& a_max,
                                                    const BigInt& b_min, const BigInt& b_max) {
    if (a_max < a_min || b_max < b_min) {
        throw InvalidParameter("empty hirzebruch range a = [" + a_min.str() + ", " + a_max.str()
                               + "], b = [" + b_min.str() + ", " + b_max.str() + "]");
    }
    std::vector<FamilyInstance> out;
    for (BigInt a = a_min; a <= a_max; ++a) {
        for (BigInt b = b_min; b <= b_max; ++b) {
            out.push_back(hirzebruch(t, a, b));
        }
    }
    return out;
}

} // namespace galcov
