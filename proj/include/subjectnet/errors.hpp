#pragma once

#include <stdexcept>

namespace subjectnet {

// Bad input data: malformed rows, violated record invariants, impossible requests.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Filesystem-level failures: missing inputs, unwritable outputs.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace subjectnet
