#ifndef FLAGSPACE_ERRORS_HPP
#define FLAGSPACE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace flagspace {

/// Caller supplied something outside an operation's domain.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// A structural identity that must hold failed. Signals a bug, not bad input.
class InvariantViolation : public std::logic_error {
 public:
  explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace flagspace

#endif  // FLAGSPACE_ERRORS_HPP
