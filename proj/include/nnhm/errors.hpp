#pragma once

#include <stdexcept>
#include <string>

namespace nnhm {

// bad arguments, malformed input files, unknown names
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DomainError : public InputError {
 public:
  using InputError::InputError;
};

// cdf/quantile/moments requested from an improper prior
class ImproperPriorError : public InputError {
 public:
  using InputError::InputError;
};

class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ImproperPosteriorError : public NumericError {
 public:
  using NumericError::NumericError;
};

}  // namespace nnhm
