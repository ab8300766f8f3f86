#pragma once

#include <stdexcept>
#include <string>

namespace subfields {

// Base of everything this library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A prime divides a denominator or makes an image degenerate. Callers pick
// another prime and try again.
struct BadPrime : Error {
  using Error::Error;
};

// Input polynomial is not irreducible over Q.
struct ReducibleInput : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

// A user-supplied option that cannot be honored, such as a bad --prime.
struct InvalidArgument : Error {
  using Error::Error;
};

// An operation was called outside its domain (division by zero, mismatched
// sizes, non-monic divisor, ...).
struct DomainError : Error {
  using Error::Error;
};

// A loop that should terminate did not within its budget.
struct InternalDefect : Error {
  using Error::Error;
};

}  // namespace subfields
