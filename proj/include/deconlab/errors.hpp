#pragma once

#include <stdexcept>
#include <string>

namespace deconlab {

// Error taxonomy mirrors the CLI exit-code contract:
//   ConfigError -> 2, IoError -> 3, NumericalError/TrainingError -> 4.
struct ShapeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct VocabError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ArgumentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TrainingError : NumericalError {
  using NumericalError::NumericalError;
};

}  // namespace deconlab
