#ifndef LPP_ERRORS_HPP_
#define LPP_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace lpp {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Matrix shape violations (non-square input, mismatched product operands).
struct DimensionError : Error {
  using Error::Error;
};

// Malformed graph input. line is 1-based; 0 means the error is not tied to
// a particular line (e.g. a connectivity failure).
struct ParseError : Error {
  explicit ParseError(const std::string& what, int line_no = 0)
      : Error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + what
                          : what),
        line(line_no) {}
  int line;
};

// Operation applied to a graph outside its supported class.
struct ClassError : Error {
  using Error::Error;
};

// Instance exceeds a size guard or a result cap.
struct CapacityError : Error {
  using Error::Error;
};

// Two routes that must agree disagreed. Never swallowed.
struct ConsistencyError : Error {
  using Error::Error;
};

// Threshold search precondition violated (predicate false at the upper bound).
struct SearchError : Error {
  using Error::Error;
};

}  // namespace lpp

#endif  // LPP_ERRORS_HPP_
