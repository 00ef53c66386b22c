#pragma once

#include <stdexcept>
#include <string>

namespace bp2 {

/// Malformed input: bad labels, self-loops, unparsable text.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A size cap was exceeded (64-vertex graphs, oracle order cap, graph6 limit).
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// An operation was called outside its stated precondition.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace bp2
