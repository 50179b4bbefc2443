#pragma once

#include <stdexcept>
#include <string>

namespace steiner4 {

/// Malformed user input: bad parameters, unreadable files, out-of-range points.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Vendored data failed its validation postconditions.
class DataIntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A code path that should be unreachable was reached.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace steiner4
