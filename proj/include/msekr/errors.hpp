#ifndef MSEKR_ERRORS_HPP
#define MSEKR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace msekr {

// Range errors (element or rank outside its domain) use std::out_of_range and
// arithmetic overflow uses std::overflow_error. The types below cover the
// remaining failure classes so the CLI can map them onto exit codes.

/// A documented precondition of an operation was violated by the caller.
class contract_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The requested instance is larger than the exhaustive routine can handle.
class scale_exceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed family file. The message carries the offending line number.
class parse_error : public std::runtime_error {
 public:
  parse_error(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// A postcondition the library guarantees did not hold. Always a bug.
class internal_invariant_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace msekr

#endif  // MSEKR_ERRORS_HPP
