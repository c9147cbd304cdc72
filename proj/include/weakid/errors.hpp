#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace weakid {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Word-grammar or group-spec syntax error; `position` is a byte offset
// into the offending input.
struct ParseError : Error {
  std::size_t position;
  ParseError(const std::string& msg, std::size_t pos) : Error(msg), position(pos) {}
};

// A configured cap (node count, assignment count, enumeration size, time)
// was exceeded. Distinct from exhaustion: the answer is unknown.
struct BudgetError : Error {
  using Error::Error;
};

struct NotNormalError : Error {
  using Error::Error;
};

// Invalid constructor parameters (non-prime field order, order above cap, ...).
struct SpecError : Error {
  using Error::Error;
};

}  // namespace weakid
