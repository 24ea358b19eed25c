#pragma once

#include <stdexcept>
#include <string>

namespace nilform {

// Error taxonomy mirrored by the C API status codes:
//   ParseError -> 2, DomainError -> 3, RefusedError -> 4.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, std::size_t position)
        : std::runtime_error(std::move(message)), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Exact-arithmetic domain failures: division by zero, vanishing denominators,
// missing parameters, singular operators, non-integrable points, metric shape.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(std::string message, std::string detail = {})
        : std::runtime_error(std::move(message)), detail_(std::move(detail)) {}
    const std::string& detail() const { return detail_; }

private:
    std::string detail_;  // e.g. the vanishing determinant of a singular operator
};

// Raised when a rank/cohomology question is posed over symbolic parameters.
class RefusedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public DomainError {
public:
    DimensionMismatch(int expected, int got)
        : DomainError("dimension mismatch: expected n=" + std::to_string(expected) +
                      ", got n=" + std::to_string(got)) {}
};

}  // namespace nilform
