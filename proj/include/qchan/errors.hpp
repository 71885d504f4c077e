#pragma once

#include <stdexcept>
#include <string>

namespace qchan {

// Base class for all semantic failures raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct NotSquare : Error {
  using Error::Error;
};

struct NotHermitian : Error {
  using Error::Error;
};

struct NotPositiveDefinite : Error {
  using Error::Error;
};

struct SingularInput : Error {
  using Error::Error;
};

struct NotUnital : Error {
  using Error::Error;
};

struct NotPSD : Error {
  using Error::Error;
};

struct BadWeights : Error {
  using Error::Error;
};

struct NoPerfectMatching : Error {
  using Error::Error;
};

struct DimensionCapExceeded : Error {
  using Error::Error;
};

// I/O and grammar failures (file missing, malformed JSON/CSV).  Kept
// separate from Error subtypes above so callers can map them to a
// different exit status.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace qchan
