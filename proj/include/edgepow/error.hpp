#pragma once

#include <stdexcept>
#include <string>

namespace edgepow {

/// Malformed or rejected input (bad file, loops, isolated vertices where forbidden).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its stated precondition.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A search bound or resource guard was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace edgepow
