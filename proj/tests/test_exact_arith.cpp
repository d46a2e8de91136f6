#include <catch2/catch_amalgamated.hpp>

#include "galcov/exact_arith.hpp"

using namespace galcov;

TEST_CASE("range_product basics") {
    CHECK(range_product(5, 4) == 1); // empty range
    CHECK(range_product(2, 4) == 24);
    CHECK(range_product(0, 1) == 0); // zero factor annihilates
    CHECK(range_product(-3, -1) == -6);
    CHECK(range_product(7, 7) == 7);
    CHECK(range_product(-2, 2) == 0);
}

TEST_CASE("range_product composes over adjacent intervals") {
    for (int a = -6; a <= 6; ++a) {
        for (int b = a - 1; b <= 6; ++b) {
            for (int c = b; c <= 6; ++c) {
                CAPTURE(a, b, c);
                CHECK(range_product(a, b) * range_product(b + 1, c) == range_product(a, c));
            }
        }
    }
}

TEST_CASE("range_product gives the falling factorial") {
    for (BigInt n = 0; n <= 12; ++n) {
        for (BigInt k = 0; k <= n; ++k) {
            CHECK(range_product(n - k + 1, n) == factorial(n) / factorial(n - k));
        }
    }
    CHECK(factorial(0) == 1);
    CHECK(factorial(12) == 479001600);
}

TEST_CASE("rationals are normalized to lowest terms, positive denominator") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6).str() == "-1/2");
    CHECK(denominator(Rational(-5, -10)) == 2);
    CHECK(numerator(Rational(-5, -10)) == 1);
    CHECK(Rational(-240, 3).str() == "-80");
    CHECK(Rational(0, 7) == Rational(0));
}

TEST_CASE("rational arithmetic laws on a grid") {
    std::vector<Rational> values;
    for (int p = -4; p <= 4; ++p) {
        for (int q = 1; q <= 3; ++q) {
            values.push_back(Rational(p, q));
        }
    }
    for (const Rational& x : values) {
        for (const Rational& y : values) {
            for (const Rational& z : values) {
                CHECK((x + y) + z == x + (y + z));
                CHECK(x * y == y * x);
                CHECK(x * (y + z) == x * y + x * z);
            }
        }
    }
}

TEST_CASE("as_integer accepts integers, rejects fractions") {
    CHECK(as_integer(Rational(4, 2), "value") == 2);
    CHECK(as_integer(Rational(-9, 3), "value") == -3);
    CHECK_THROWS_AS(as_integer(Rational(3, 2), "value"), IntegralityViolation);
    CHECK_THROWS_WITH(as_integer(Rational(1, 4), "c2(X_Gal)"),
                      "c2(X_Gal) = 1/4 is not an integer");
}
