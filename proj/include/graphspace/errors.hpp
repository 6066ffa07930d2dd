#pragma once

#include <stdexcept>
#include <string>

namespace graphspace {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two graphs (or a graph and a model) disagree on node count.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A numeric argument is outside its admissible range.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A graph file could not be parsed; message carries the line number.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A model specification is malformed or internally inconsistent.
class SpecError : public Error {
 public:
  using Error::Error;
};

/// The requested operation is not defined for this model family.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// An observed graph's total weight does not match the model's edge count.
class NormalizationError : public Error {
 public:
  using Error::Error;
};

}  // namespace graphspace
