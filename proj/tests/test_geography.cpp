#include <catch2/catch_amalgamated.hpp>

#include "galcov/geography.hpp"

using namespace galcov;

TEST_CASE("geography of known pairs") {
    const GeographyReport g = geography({48, 144});
    CHECK(g.signature == -80);
    REQUIRE(g.slope);
    CHECK(*g.slope == Rational(1, 3));
    CHECK(g.chi_times_12 == 192);
    CHECK(g.bmy_ok);
    CHECK(g.noether_line_ok);
    CHECK(g.nonneg_ok);
    CHECK(g.noether_mod12_ok);

    const GeographyReport gal = geography({216, 384});
    CHECK(gal.signature == -184);
    CHECK(*gal.slope == Rational(9, 16));

    const GeographyReport zero = geography({0, 0});
    CHECK(zero.signature == 0);
    CHECK(!zero.slope);
    CHECK(zero.bmy_ok);
}

TEST_CASE("signature may be a strict rational") {
    const GeographyReport g = geography({1, 0});
    CHECK(g.signature == Rational(1, 3));
    CHECK(3 * g.signature == 1);
}

TEST_CASE("diagnostic flags name each failed inequality") {
    // hirzebruch(t=0, a=1, b=3) at k = 2 lands on negative c1^2
    const GeographyReport g = geography({-12, 24});
    CHECK(!g.nonneg_ok);
    CHECK(!g.noether_line_ok);
    CHECK(g.bmy_ok);
    CHECK(g.noether_mod12_ok); // -12 + 24 = 12
    const std::vector<std::string> flags = diagnostic_flags(g);
    REQUIRE(flags.size() == 2);
    CHECK(flags[0] == "negative-chern(c1sq=-12, c2=24)");
    CHECK(flags[1] == "noether-line-violated(5c1sq=-60, c2-36=-12)");

    CHECK(diagnostic_flags(geography({48, 144})).empty());
    const std::vector<std::string> mod12 = diagnostic_flags(geography({1, 1}));
    REQUIRE(!mod12.empty());
    CHECK(mod12.back() == "noether-mod12-warning(c1sq+c2=2)");
}

TEST_CASE("published-value flags trigger on the exact data") {
    const BranchData k3_data{4, 12, 36, 24, 12};
    const std::vector<std::string> k3_flags =
        published_value_flags(k3_data, 3, geography({216, 384}));
    REQUIRE(k3_flags.size() == 1);
    CHECK(k3_flags[0] == "paper-example-3.3-c2-discrepancy(printed=240, computed=384)");
    // k = 4 aliases to k = 3, same flag
    CHECK(published_value_flags(k3_data, 4, geography({216, 384})).size() == 1);
    CHECK(published_value_flags(k3_data, 2, geography({48, 144})).empty());

    const BranchData v3{9, 18, 12, 42, 84};
    const std::vector<std::string> v3_flags =
        published_value_flags(v3, 4, geography({35784, 22176}));
    REQUIRE(v3_flags.size() == 1);
    CHECK(v3_flags[0] == "paper-slope-2.73-unreproduced(computed=1.6136)");
}

TEST_CASE("scan emits ordered rows with cross-checked values") {
    const ScanResult result = scan(veronese_range(3, 3), {KPolicy::AllK, 1, 1});
    REQUIRE(result.rows.size() == 8); // n = 9: k = 1..8
    CHECK(result.rows[0].k == 1);
    CHECK(result.rows[0].geo.chern == ChernPair{9, 3});
    CHECK(result.rows[3].k == 4);
    CHECK(result.rows[3].geo.chern == ChernPair{35784, 22176});
    REQUIRE(result.rows[3].geo.slope);
    CHECK(*result.rows[3].geo.slope == Rational(71, 44));
    CHECK(result.rows[3].flags.size() == 1); // slope claim flag
    CHECK(result.rows[7].geo.chern == ChernPair{13063680, 6894720});
    // no negative-to-positive signature crossing for b = 3
    REQUIRE(result.instances.size() == 1);
    CHECK(!result.instances[0].sign_change_k);
    // the base row X_1 = CP^2 has the top slope 3
    REQUIRE(result.max_slope);
    CHECK(result.max_slope->slope == 3);
    CHECK(result.max_slope->k == 1);
}

TEST_CASE("scan over the k3 instance flags the printed c2") {
    const ScanResult result = scan({k3()}, {KPolicy::AllK, 1, 1});
    REQUIRE(result.rows.size() == 3);
    CHECK(result.rows[0].geo.chern.c2 == 24);
    CHECK(result.rows[1].geo.chern.c2 == 144);
    CHECK(result.rows[2].geo.chern.c2 == 384);
    REQUIRE(result.rows[2].flags.size() == 1);
    CHECK(result.rows[2].flags[0] == "paper-example-3.3-c2-discrepancy(printed=240, computed=384)");
}

TEST_CASE("scan reports the signature crossing ratio") {
    // first veronese order whose tower returns to positive signature
    const ScanResult result = scan(veronese_range(8, 8), {KPolicy::AllK, 1, 2});
    REQUIRE(result.instances.size() == 1);
    REQUIRE(result.instances[0].sign_change_k);
    CHECK(*result.instances[0].sign_change_k == 55);
    CHECK(*result.instances[0].crossing_ratio == Rational(55, 64));
}

TEST_CASE("scan is deterministic across thread counts") {
    const std::vector<FamilyInstance> range = veronese_range(2, 5);
    const ScanResult a = scan(range, {KPolicy::AllK, 1, 1});
    const ScanResult b = scan(range, {KPolicy::AllK, 1, 7});
    REQUIRE(a.rows.size() == b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        CHECK(a.rows[i].label == b.rows[i].label);
        CHECK(a.rows[i].k == b.rows[i].k);
        CHECK(a.rows[i].geo.chern == b.rows[i].geo.chern);
        CHECK(a.rows[i].geo.signature == b.rows[i].geo.signature);
        CHECK(a.rows[i].flags == b.rows[i].flags);
    }
    REQUIRE(a.max_slope && b.max_slope);
    CHECK(a.max_slope->label == b.max_slope->label);
    CHECK(a.max_slope->slope == b.max_slope->slope);
}

TEST_CASE("fixed-k scan keeps one row per instance") {
    const ScanResult result = scan(veronese_range(2, 4), {KPolicy::FixedK, 2, 1});
    REQUIRE(result.rows.size() == 3);
    for (const ScanRow& row : result.rows) {
        CHECK(row.k == 2);
    }
    // instances whose tower is shorter than the requested k drop out
    const ScanResult sparse = scan({hirzebruch(0, 1, 1), veronese(3)}, {KPolicy::FixedK, 5, 1});
    REQUIRE(sparse.rows.size() == 1);
    CHECK(sparse.rows[0].label == "veronese(b=3)");
}

TEST_CASE("scan rejects bad thread counts") {
    CHECK_THROWS_AS(scan({k3()}, {KPolicy::AllK, 1, 0}), InvalidParameter);
}
