#pragma once

#include <stdexcept>
#include <string>

namespace borelkit {

// Malformed or out-of-contract input (parse errors, precondition violations).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured size cap was exceeded (oracle candidate lattice, enumeration).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A result contradicted a proven property; indicates a bug, never user error.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace borelkit
