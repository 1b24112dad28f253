#pragma once

#include <stdexcept>
#include <string>

namespace orlicz {

// Base of every exception thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The input itself is malformed or outside the documented parameter range.
struct InputError : Error {
  using Error::Error;
};

// The input is fine, but the query asks for a value the stored finite data
// cannot determine exactly.
struct RangeError : Error {
  using Error::Error;
};

struct InvalidParameter : InputError {
  using InputError::InputError;
};
struct NotNormalized : InputError {
  using InputError::InputError;
};
struct NotLogConvex : InputError {
  using InputError::InputError;
};
struct HorizonMismatch : InputError {
  using InputError::InputError;
};
struct NotConvex : InputError {
  using InputError::InputError;
};
struct SlopeBounded : InputError {
  using InputError::InputError;
};
struct InvalidDensity : InputError {
  using InputError::InputError;
};
struct NotStrictlyIncreasing : InputError {
  using InputError::InputError;
};
struct NotNFunction : InputError {
  using InputError::InputError;
};
struct IncompleteReports : InputError {
  using InputError::InputError;
};

struct DomainExceeded : RangeError {
  using RangeError::RangeError;
};
struct IndexExceeded : RangeError {
  using RangeError::RangeError;
};
struct SlopeExceeded : RangeError {
  using RangeError::RangeError;
};

}  // namespace orlicz
