#pragma once

#include <stdexcept>
#include <string>

namespace faultline {

/// Malformed input: unknown letters, schema violations, mismatched shapes.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured cap (word length, tile count) would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inputs violate a structural hypothesis an operation depends on.
class HypothesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Classification could not be certified at the configured caps.
class UndeterminedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An invariant that should hold for every legal input did not.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace faultline
