#pragma once

#include <stdexcept>
#include <string>

namespace qmermin {

/// Precondition on user-supplied input violated (N < 3, k out of range, bad word string).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A size guard refused the request (dense matrix too large, brute force N too big).
class GuardViolation : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Checked integer arithmetic in the cyclotomic ring would have wrapped.
class ArithmeticOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

}  // namespace qmermin
