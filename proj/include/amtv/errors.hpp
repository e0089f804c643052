#pragma once

#include <stdexcept>
#include <string>

namespace amtv {

struct AmtvError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : AmtvError {
  using AmtvError::AmtvError;
};

struct NotAdmissible : AmtvError {
  using AmtvError::AmtvError;
};

struct PrecisionError : AmtvError {
  using AmtvError::AmtvError;
};

struct CacheError : AmtvError {
  using AmtvError::AmtvError;
};

struct VerificationError : AmtvError {
  using AmtvError::AmtvError;
};

}  // namespace amtv
