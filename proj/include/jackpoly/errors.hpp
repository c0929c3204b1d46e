#pragma once

#include <stdexcept>
#include <string>

namespace jackpoly {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two operands live in polynomial rings with different variable counts.
class VariableCountMismatch : public Error {
 public:
  using Error::Error;
};

/// A variable or order index outside 1..n.
class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

/// Exact division left a remainder.
class NonzeroRemainder : public Error {
 public:
  using Error::Error;
};

class NotSymmetric : public Error {
 public:
  using Error::Error;
};

class NotHomogeneous : public Error {
 public:
  using Error::Error;
};

class InvalidPartition : public Error {
 public:
  using Error::Error;
};

class PartitionTooLong : public Error {
 public:
  using Error::Error;
};

class WeightMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// A Gram-Schmidt pivot <P, P> vanished; indicates an implementation fault.
class DegenerateGram : public Error {
 public:
  using Error::Error;
};

/// A documented precondition (other than the ones above) was violated.
class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace jackpoly
