#pragma once

#include <stdexcept>
#include <string>

namespace wcl {

// Bad input from the caller: malformed literal, port outside the universe,
// mismatched semirings, and so on.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An enumeration or evaluation would exceed a configured size limit.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace wcl
