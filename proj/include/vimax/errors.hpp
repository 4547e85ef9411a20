#pragma once

#include <stdexcept>
#include <string>

namespace vimax {

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad call arguments or unusable CLI input.
class argument_error : public error {
 public:
  using error::error;
};

// Malformed instance / solution / CNF text; carries the offending line.
class parse_error : public error {
 public:
  parse_error(int line, const std::string& what)
      : error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_ = 0;
};

// Input data fails an integrity check (totals, checksums, cross-checks).
class data_error : public error {
 public:
  using error::error;
};

// A guard refused to start work that would exceed a configured size cap.
class size_error : public error {
 public:
  using error::error;
};

// Operation requires a structure the input lacks (e.g. symmetric capacities).
class unsupported_structure : public error {
 public:
  using error::error;
};

}  // namespace vimax
