#pragma once

#include <stdexcept>

namespace nkwalk {

// A value outside its documented domain (bad n/k, locus out of range, ...).
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Request exceeds a hard implementation bound (exhaustive enumeration, table memory).
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Inconsistent strategy/suite configuration, including config-file parse errors.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Filesystem or serialization failure.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace nkwalk
