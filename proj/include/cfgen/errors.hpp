#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cfgen {

/// Base class for every error raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class division_by_zero : public error {
public:
    division_by_zero() : error("division by zero") {}
};

/// Rational-point evaluation hit a zero denominator.
class pole_error : public error {
public:
    using error::error;
};

/// A series does not carry enough coefficients for the requested operation.
class truncation_error : public error {
public:
    using error::error;
};

/// The operation is not defined for the continued fraction's shape.
class shape_error : public error {
public:
    using error::error;
};

/// Requested a convergent beyond the last level of a terminated fraction.
class terminated_error : public error {
public:
    terminated_error(std::size_t requested, std::size_t available)
        : error("depth " + std::to_string(requested) + " beyond terminated fraction with " +
                std::to_string(available) + " levels") {}
};

/// Invalid parameters; the message names the violated invariant.
class usage_error : public error {
public:
    using error::error;
};

}  // namespace cfgen
