#pragma once

#include <stdexcept>
#include <string>

namespace rankone {

// A value violates a domain invariant: unknown vertex, fixed point, mark of
// the wrong rank, wrong ground set.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Text could not be parsed. `column()` is 1-based, 0 when not applicable.
class FormatError : public std::invalid_argument {
 public:
  explicit FormatError(const std::string& what, std::size_t column = 0)
      : std::invalid_argument(what), column_(column) {}

  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

// A caller broke an operation's precondition (e.g. a structural edit that
// would break the increasing property).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An internal step of the bijection reached a state its construction rules
// out. Reported by verification instead of being swallowed.
class InvariantFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A request exceeded a configured resource ceiling.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rankone
