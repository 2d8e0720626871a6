#pragma once

#include <stdexcept>
#include <string>

namespace zpp {

/// Malformed input or unsupported parameters (bad field, dimension mismatch,
/// characteristic-2 request for a Jordan operation, ...).  CLI exit code 2.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// A verified internal consistency check failed.  These checks guard
/// identities that hold for every valid input, so seeing one is a bug.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace zpp
