#pragma once

#include <stdexcept>
#include <string>

namespace gf2lights {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class NotSymmetric : public Error {
 public:
  using Error::Error;
};

// Raised when a solve that must succeed for a symmetric system reports
// infeasibility. Never expected in practice; tests treat it as an alarm.
class InternalTheoremViolation : public Error {
 public:
  using Error::Error;
};

class SymmetryViolation : public Error {
 public:
  using Error::Error;
};

class PrefixTooLong : public Error {
 public:
  using Error::Error;
};

class CellTooLarge : public Error {
 public:
  using Error::Error;
};

class Unsolvable : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class InvalidGraph : public Error {
 public:
  using Error::Error;
};

class InvalidSpec : public Error {
 public:
  using Error::Error;
};

}  // namespace gf2lights
