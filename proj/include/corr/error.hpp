#pragma once

#include <stdexcept>
#include <string>

namespace corr {

// Base error for all validation and I/O failures in the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parse failure with the offending 1-based line number.
struct ParseError : Error {
  int line;
  ParseError(int line_, const std::string& msg)
      : Error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

}  // namespace corr
