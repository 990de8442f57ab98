#pragma once

#include <stdexcept>
#include <string>

namespace ogs {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Malformed text in one of the notation grammars.
class ParseError : public Error
{
public:
  using Error::Error;
};

/// An index, exponent or degree outside its admissible range.
class RangeError : public Error
{
public:
  using Error::Error;
};

/// Operands of different degree.
class DegreeMismatch : public RangeError
{
public:
  using RangeError::RangeError;
};

/// An odd permutation where an element of the alternating group is required.
class ParityError : public Error
{
public:
  using Error::Error;
};

/// A broken internal invariant (budget exhaustion, failed post-check).
class InternalError : public Error
{
public:
  using Error::Error;
};

} // namespace ogs
