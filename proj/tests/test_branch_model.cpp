#include <catch2/catch_amalgamated.hpp>

#include "galcov/branch_model.hpp"

using namespace galcov;

namespace {
const BranchData kK3{4, 12, 36, 24, 12};
}

TEST_CASE("dual_degree") {
    CHECK(dual_degree(12, 12, 24) == 36); // K3
    CHECK(dual_degree(18, 84, 42) == 12); // veronese b=3
    CHECK(dual_degree(0, 0, 0) == 0);
    CHECK(dual_degree(4, 0, 5) == -3); // inconsistent inputs may go negative
}

TEST_CASE("genus_of_model") {
    CHECK(genus_of_model(12, 12, 24) == 19);
    CHECK(genus_of_model(18, 84, 42) == 10);
    CHECK(genus_of_model(3, 0, 0) == 1); // smooth cubic
    CHECK(genus_of_model(2, 5, 0) == -5);
}

TEST_CASE("validate_branch accepts consistent data") {
    CHECK(validate_branch(kK3).ok());
    CHECK(validate_branch(BranchData{4, 6, 3, 9, 0}).ok()); // veronese b=2
    CHECK(validate_branch(BranchData{2, 2, 2, 0, 0}).ok());
}

TEST_CASE("validate_branch reports the violated identity") {
    const ValidationReport report = validate_branch(BranchData{4, 12, 35, 24, 12});
    REQUIRE(!report.ok());
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].identity == "dual-degree");
    CHECK(report.violations[0].expected == 36);
    CHECK(report.violations[0].actual == 35);
}

TEST_CASE("validate_branch flags negative counts and genus") {
    const ValidationReport negative = validate_branch(BranchData{4, 12, 36, 24, -1});
    REQUIRE(!negative.ok());
    bool saw_nonneg = false;
    for (const Violation& v : negative.violations) {
        if (v.identity == "nonnegative(d)") {
            saw_nonneg = true;
            CHECK(v.actual == -1);
        }
    }
    CHECK(saw_nonneg);

    // d + rho exceeding (m-1)(m-2)/2 drives the genus negative
    const ValidationReport genus = validate_branch(BranchData{4, 4, 0, 0, 4});
    REQUIRE(!genus.ok());
    CHECK(genus.violations[0].identity == "dual-degree");
    bool saw_genus = false;
    for (const Violation& v : genus.violations) {
        saw_genus = saw_genus || v.identity == "genus-nonnegative";
    }
    CHECK(saw_genus);
}

TEST_CASE("derive_branch reproduces the family data") {
    CHECK(derive_branch({9, 3, 9, -9}) == BranchData{9, 18, 12, 42, 84});  // veronese b=3
    CHECK(derive_branch({0, 24, 4, 0}) == kK3);                            // K3
    CHECK(derive_branch({8, 4, 3, -5}) == BranchData{3, 4, 3, 3, 0});      // hirzebruch(1,1,1)
}

TEST_CASE("derive_branch output passes validation") {
    const SurfaceIntrinsics grid[] = {{9, 3, 9, -9}, {0, 24, 4, 0}, {8, 4, 3, -5}, {8, 4, 2, -4}};
    for (const SurfaceIntrinsics& s : grid) {
        CHECK(validate_branch(derive_branch(s)).ok());
    }
}

TEST_CASE("derive_branch rejects unrealizable intrinsics") {
    CHECK_THROWS_AS(derive_branch({1, 1, 2, 0}), NonIntegralSolution); // d = -26
    CHECK_THROWS_AS(derive_branch({0, 0, 1, -3}), DegenerateSurface);  // m = 0
    CHECK_THROWS_AS(derive_branch({0, 0, 0, 0}), DegenerateSurface);   // deg X = 0
    CHECK_THROWS_AS(derive_branch({0, 24, 4, 1}), NonIntegralSolution); // g(R) half-integral
}

TEST_CASE("node and cusp counts are determined by (m, mu, g)") {
    // re-solving the two linear identities recovers the inputs
    const BranchData cases[] = {kK3, {9, 18, 12, 42, 84}, {3, 4, 3, 3, 0}, {2, 2, 2, 0, 0}};
    for (const BranchData& x : cases) {
        const BigInt g = numerator(genus_of_model(x.m, x.d, x.rho));
        const BigInt rho = 2 * (x.m - 1) - x.mu + 2 * g;
        const BigInt d = (x.m - 1) * (x.m - 2) / 2 - g - rho;
        CHECK(rho == x.rho);
        CHECK(d == x.d);
    }
}
