#ifndef KOORN_ERROR_H_
#define KOORN_ERROR_H_

#include <stdexcept>
#include <string>

namespace koorn {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands live in different variable counts or group ranks.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// An exact division left a nonzero remainder.
class InexactDivision : public Error {
 public:
  using Error::Error;
};

// A denominator, pole separation or recursion coefficient vanished at the
// chosen parameter point. Resampling the point is the usual remedy.
class NonGenericParameters : public Error {
 public:
  using Error::Error;
};

// Parameters violate a modulus constraint or are otherwise malformed.
class InvalidParameters : public Error {
 public:
  using Error::Error;
};

// Malformed user input (fraction strings, index vectors, JSON).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace koorn

#endif  // KOORN_ERROR_H_
