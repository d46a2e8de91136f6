#pragma once

#include <stdexcept>
#include <string>

namespace galcov {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Cover index outside the range that makes sense for the projection degree.
class InvalidK : public Error {
public:
    using Error::Error;
};

// A half/quarter/sixth-weighted sum failed to clear its denominator.
class IntegralityViolation : public Error {
public:
    using Error::Error;
};

// Intrinsic data does not solve to non-negative integer branch counts.
class NonIntegralSolution : public Error {
public:
    using Error::Error;
};

// Derived branch curve has non-positive degree.
class DegenerateSurface : public Error {
public:
    using Error::Error;
};

// Family or range parameter outside its admissible domain.
class InvalidParameter : public Error {
public:
    using Error::Error;
};

} // namespace galcov
