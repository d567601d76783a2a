#pragma once

#include <stdexcept>
#include <string>

namespace graev {

/// Malformed input: a file, a field, or an argument that cannot be parsed.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shape mismatch between objects that must agree (matrix size, space, depth).
class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace graev
