#pragma once

#include <stdexcept>
#include <string>

namespace qzeta {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
  using Error::Error;
};

// Exact mode was asked for a value that has no exact rational representation.
class NonRepresentableError : public Error {
public:
  using Error::Error;
};

// A tail policy's target bound could not be met within the term cap.
class TruncationError : public Error {
public:
  using Error::Error;
};

// Malformed textual input (numbers, character files, CLI values).
class FormatError : public Error {
public:
  using Error::Error;
};

} // namespace qzeta
