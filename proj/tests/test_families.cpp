#include <catch2/catch_amalgamated.hpp>

#include "galcov/cover_engine.hpp"
#include "galcov/families.hpp"

using namespace galcov;

TEST_CASE("veronese closed forms") {
    const FamilyInstance b2 = veronese(2);
    CHECK(b2.branch == BranchData{4, 6, 3, 9, 0});
    CHECK(b2.label == "veronese(b=2)");
    REQUIRE(b2.intrinsics);
    CHECK(*b2.intrinsics == SurfaceIntrinsics{9, 3, 4, -6});

    const FamilyInstance b3 = veronese(3);
    CHECK(b3.branch == BranchData{9, 18, 12, 42, 84});
    CHECK(*b3.intrinsics == SurfaceIntrinsics{9, 3, 9, -9});

    CHECK_THROWS_AS(veronese(1), InvalidParameter);
}

TEST_CASE("veronese node count is non-negative and vanishes only at b = 2") {
    for (BigInt b = 2; b <= 10; ++b) {
        const FamilyInstance inst = veronese(b);
        CHECK(inst.branch.d >= 0);
        CHECK((inst.branch.d == 0) == (b == 2));
        CHECK(validate_branch(inst.branch).ok());
    }
}

TEST_CASE("hirzebruch closed forms") {
    const FamilyInstance h111 = hirzebruch(1, 1, 1);
    CHECK(h111.branch == BranchData{3, 4, 3, 3, 0});
    CHECK(h111.label == "hirzebruch(t=1,a=1,b=1)");
    REQUIRE(h111.intrinsics);
    CHECK(*h111.intrinsics == SurfaceIntrinsics{8, 4, 3, -5});

    const FamilyInstance h011 = hirzebruch(0, 1, 1);
    CHECK(h011.branch == BranchData{2, 2, 2, 0, 0});
    CHECK(h011.intrinsics->ek == -4); // -2a - 2b at t = 0

    CHECK_THROWS_AS(hirzebruch(0, 0, 1), InvalidParameter);
    CHECK_THROWS_AS(hirzebruch(-1, 1, 1), InvalidParameter);
}

TEST_CASE("k3 instance") {
    const FamilyInstance inst = k3();
    CHECK(inst.branch == BranchData{4, 12, 36, 24, 12});
    REQUIRE(inst.intrinsics);
    CHECK(*inst.intrinsics == SurfaceIntrinsics{0, 24, 4, 0});
    CHECK(validate_branch(inst.branch).ok());
    CHECK(derive_branch(*inst.intrinsics) == inst.branch);
}

TEST_CASE("intrinsics round-trip exactly through derive_branch") {
    for (BigInt b = 2; b <= 10; ++b) {
        const FamilyInstance inst = veronese(b);
        CHECK(derive_branch(*inst.intrinsics) == inst.branch);
    }
    for (BigInt t = 0; t <= 3; ++t) {
        for (BigInt a = 1; a <= 6; ++a) {
            for (BigInt b = 1; b <= 6; ++b) {
                const FamilyInstance inst = hirzebruch(t, a, b);
                CAPTURE(t, a, b);
                CHECK(validate_branch(inst.branch).ok());
                CHECK(derive_branch(*inst.intrinsics) == inst.branch);
            }
        }
    }
}

TEST_CASE("the k = 1 cover is the base surface") {
    for (BigInt b = 2; b <= 8; ++b) {
        const CrossCheckedChern cc = chern(veronese(b).branch, 1);
        CHECK(cc.closed == ChernPair{9, 3});
        CHECK(cc.agree);
    }
    for (BigInt t = 0; t <= 2; ++t) {
        for (BigInt a = 1; a <= 4; ++a) {
            for (BigInt b = 1; b <= 4; ++b) {
                CAPTURE(t, a, b);
                CHECK(chern(hirzebruch(t, a, b).branch, 1).closed == ChernPair{8, 4});
            }
        }
    }
    CHECK(chern(k3().branch, 1).closed == ChernPair{0, 24});
}

TEST_CASE("range builders emit instances in order and reject empty ranges") {
    const std::vector<FamilyInstance> vs = veronese_range(2, 4);
    REQUIRE(vs.size() == 3);
    CHECK(vs[0].label == "veronese(b=2)");
    CHECK(vs[2].label == "veronese(b=4)");
    CHECK_THROWS_AS(veronese_range(4, 2), InvalidParameter);

    const std::vector<FamilyInstance> hs = hirzebruch_range(1, 1, 2, 1, 2);
    REQUIRE(hs.size() == 4);
    CHECK(hs[0].label == "hirzebruch(t=1,a=1,b=1)");
    CHECK(hs[1].label == "hirzebruch(t=1,a=1,b=2)");
    CHECK(hs[3].label == "hirzebruch(t=1,a=2,b=2)");
    CHECK_THROWS_AS(hirzebruch_range(0, 2, 1, 1, 1), InvalidParameter);
}
