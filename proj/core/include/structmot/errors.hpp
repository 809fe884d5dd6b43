#pragma once

#include <stdexcept>
#include <string>

namespace structmot {

// File could not be opened/read/written.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// File opened fine but its contents are invalid. Carries the 1-based line
// number when the failure is tied to a specific line (0 otherwise).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? what + " (line " + std::to_string(line) + ")" : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Inputs violate an operation's contract (wrong cardinality, frame out of
// order, instance too large for an exact oracle, ...).
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace structmot
