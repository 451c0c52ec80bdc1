#pragma once

#include <stdexcept>

namespace schubcalc {

// Caller supplied something outside an operation's domain (bad permutation
// text, support bound too small, malformed certificate).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computed identity that must hold did not. Always a bug in this library.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace schubcalc
