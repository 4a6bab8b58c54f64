#pragma once

#include <stdexcept>
#include <string>

namespace transverse {

// Malformed files, unparsable values, inconsistent dimensions.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parameters outside an operation's domain (bad family, q too large, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Genericity certification failed on every allowed regeneration attempt.
class GenericityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace transverse
