#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace torrec {

struct SingularError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when a full point listing would exceed the caller's cap.
// The exact count is still known from the determinant.
struct CapExceeded : std::runtime_error {
    explicit CapExceeded(std::string count_str)
        : std::runtime_error("point count " + count_str + " exceeds cap"),
          count(std::move(count_str)) {}
    std::string count;
};

struct OracleTooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct HypothesisError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RegimeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RationalInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InsufficientSamples : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OddPowerWithNegativeEigenvalue : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace torrec
