#pragma once

#include <stdexcept>
#include <string>

namespace acm {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller passed something structurally wrong (bad n, bad component index, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Mismatched matrix/tensor dimensions. Always an error, never a failed check.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Malformed JSON or missing required fields.
class ParseError : public Error {
 public:
  using Error::Error;
};

// An operator was applied outside its mathematical domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Tensor failed the constraint-space membership gate.
class NotInSpaceError : public Error {
 public:
  using Error::Error;
};

// Structure axioms violated where a valid structure is required.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class UnknownChartError : public Error {
 public:
  using Error::Error;
};

// Sampled-subspace rank did not stabilize within the seed budget.
class RankUnstableError : public Error {
 public:
  using Error::Error;
};

}  // namespace acm
