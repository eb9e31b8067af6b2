#pragma once

#include <stdexcept>
#include <string>

namespace amicable {

/// Input outside the supported numeric range (names the bound in what()).
class RangeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// An intermediate or final result does not fit in 64 bits.
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// Input violates a mathematical precondition (wrong parity, repeated prime, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Inconsistent run configuration, e.g. a checkpoint that belongs to another shard.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed checkpoint document.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace amicable
