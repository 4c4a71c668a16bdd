#pragma once

#include <stdexcept>
#include <string>

namespace tpmi {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An arm's cascade is exactly the zero matrix (crossed polarizers).
struct DegenerateChain : Error {
  using Error::Error;
};

/// A normalization denominator vanished (an arm transmits no light).
struct DegenerateNormalization : Error {
  using Error::Error;
};

/// A scan grid cannot resolve the requested oscillation.
struct InsufficientSpan : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

struct ValidationError : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

} // namespace tpmi
