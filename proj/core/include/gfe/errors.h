#pragma once

#include <stdexcept>
#include <string>

namespace gfe {

// Error taxonomy. The CLI maps these onto process exit codes:
//   ConfigError -> 1, DataError (and subclasses) -> 2, NumericError -> 3.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid configuration, CLI usage, or violated config invariant.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Problems with input data (files, corpora, donors).
class DataError : public Error {
 public:
  using Error::Error;
};

class IoError : public DataError {
 public:
  using DataError::DataError;
};

class FormatError : public DataError {
 public:
  using DataError::DataError;
};

// Input that is structurally valid but unusable (e.g. no fundus disc found).
class DegenerateInputError : public DataError {
 public:
  using DataError::DataError;
};

class MissingDonorError : public DataError {
 public:
  using DataError::DataError;
};

// Metrics fed values outside the required range.
class RangeError : public DataError {
 public:
  using DataError::DataError;
};

// Tensor/layer shape contract violations.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Stale feature bundles, mismatched pass ids, checkpoint/config mismatches.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

// Non-finite losses or gradients during optimization.
class NumericError : public Error {
 public:
  using Error::Error;
};

class ScheduleError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

}  // namespace gfe
