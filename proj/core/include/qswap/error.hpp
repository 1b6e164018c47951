#pragma once

#include <stdexcept>
#include <string>

namespace qswap {

// Inconsistent shapes: mismatched dimensions, bad subsystem annotations.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A numeric argument lies outside its admissible domain.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A state was requested for a measurement branch that occurs with probability 0.
class ZeroProbabilityBranch : public DomainError {
public:
    using DomainError::DomainError;
};

// The dense path would exceed the configured matrix side-length cap.
class CapacityError : public DomainError {
public:
    using DomainError::DomainError;
};

}  // namespace qswap
