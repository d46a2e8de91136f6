#pragma once

#include <string>

#include "galcov/exact_arith.hpp"

// Presentation helpers. Everything upstream is exact; decimal strings are
// produced only here.

namespace galcov {

// "p/q" in lowest terms, or a plain integer when the denominator is 1.
inline std::string rational_str(const Rational& q) {
    return q.str();
}

// Fixed-point decimal with `places` fractional digits, rounding half away
// from zero. Pure integer arithmetic, so output is deterministic.
inline std::string decimal_str(const Rational& q, unsigned places) {
    BigInt num = numerator(q);
    const BigInt den = denominator(q);
    const bool negative = num < 0;
    if (negative) {
        num = -num;
    }
    BigInt scale = 1;
    for (unsigned i = 0; i < places; ++i) {
        scale *= 10;
    }
    const BigInt scaled = (2 * num * scale + den) / (2 * den);
    std::string out = BigInt(scaled / scale).str();
    if (places > 0) {
        std::string frac = BigInt(scaled % scale).str();
        frac.insert(0, places - frac.size(), '0');
        out += "." + frac;
    }
    return (negative && scaled != 0) ? "-" + out : out;
}

} // namespace galcov
