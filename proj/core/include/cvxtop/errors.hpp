#pragma once

#include <stdexcept>
#include <string>

namespace cvxtop {

// Malformed input: bad file syntax, out-of-range indices, violated
// preconditions on arguments.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A result would exceed a configured size guard (e.g. digit bound on Xi).
class SizeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cvxtop
