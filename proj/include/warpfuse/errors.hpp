#pragma once

#include <stdexcept>
#include <string>

namespace warpfuse {

// Base class for errors caused by bad inputs (files, flags, records).
// The CLI maps these to exit code 2; anything else is an internal error (1).
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MissingFile : ValidationError {
  explicit MissingFile(const std::string& what) : ValidationError("missing file: " + what) {}
};

struct DimensionMismatch : ValidationError {
  using ValidationError::ValidationError;
};

struct InvalidCamera : ValidationError {
  using ValidationError::ValidationError;
};

struct ParseError : ValidationError {
  using ValidationError::ValidationError;
};

struct NonPositiveDepth : ValidationError {
  NonPositiveDepth() : ValidationError("back-projection requires depth > 0") {}
};

struct NoValidDepth : ValidationError {
  using ValidationError::ValidationError;
};

struct GridMismatch : ValidationError {
  using ValidationError::ValidationError;
};

struct EmptyInput : ValidationError {
  using ValidationError::ValidationError;
};

struct TooFewViews : ValidationError {
  using ValidationError::ValidationError;
};

struct ShapeMismatch : ValidationError {
  using ValidationError::ValidationError;
};

struct TooSmall : ValidationError {
  using ValidationError::ValidationError;
};

struct InvalidFactor : ValidationError {
  using ValidationError::ValidationError;
};

// Write-side failures are environmental, not input validation.
struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace warpfuse
