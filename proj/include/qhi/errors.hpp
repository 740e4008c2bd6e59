#pragma once

#include <stdexcept>
#include <string>

namespace qhi {

/// Operand qubit counts do not match.
struct DimensionError : std::invalid_argument {
  explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

/// Requested size exceeds what the implementation supports.
struct CapacityError : std::length_error {
  explicit CapacityError(const std::string& what) : std::length_error(what) {}
};

/// Invalid input value (negative rate, non-Hermitian state, ...).
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or inconsistent configuration.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// The identification pipeline could not produce a usable result.
struct IdentificationError : std::runtime_error {
  explicit IdentificationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qhi
