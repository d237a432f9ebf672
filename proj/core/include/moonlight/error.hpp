#pragma once

#include <stdexcept>
#include <string>

namespace moonlight {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed signal, grid, interval or spatial model.
class ModelError : public Error {
 public:
  using Error::Error;
};

/// Lookup outside the domain of a piecewise-constant structure.
class QueryError : public Error {
 public:
  using Error::Error;
};

/// Runtime failure while evaluating an atomic expression.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

/// A monitoring request that does not fit its inputs.
class MonitorError : public Error {
 public:
  using Error::Error;
};

}  // namespace moonlight
