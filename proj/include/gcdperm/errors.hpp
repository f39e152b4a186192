#pragma once

#include <stdexcept>
#include <string>

namespace gcdperm {

// Requested size exceeds a configured cap.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A record list does not reach far enough for the requested index.
class InsufficientRecordsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A cycle walk left the generated prefix and could not be closed under the cap.
class IncompleteCycleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Classification found no certificate within the simulation budget.
class BudgetExhaustedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownValueError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input; carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace gcdperm
