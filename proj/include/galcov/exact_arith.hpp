#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "galcov/errors.hpp"

namespace galcov {

// All quantities in this library are exact: arbitrary-precision integers and
// rationals, no floating point anywhere in computed values.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Product of every integer in [lo, hi]. An empty range (lo > hi) yields 1;
// zero and negative factors are taken literally, not clamped. Boundary
// vanishing (a zero factor) is meaningful to callers.
inline BigInt range_product(BigInt lo, const BigInt& hi) {
    BigInt acc(1);
    for (; lo <= hi; ++lo) {
        acc *= lo;
    }
    return acc;
}

inline BigInt factorial(const BigInt& n) {
    return range_product(2, n);
}

inline bool is_integer(const Rational& q) {
    return denominator(q) == 1;
}

// Integer value of q, or IntegralityViolation naming the quantity.
inline BigInt as_integer(const Rational& q, const std::string& what) {
    if (!is_integer(q)) {
        throw IntegralityViolation(what + " = " + q.str() + " is not an integer");
    }
    return numerator(q);
}

} // namespace galcov
