#pragma once

#include <stdexcept>
#include <string>

namespace focal {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Division by a non-unit, or a modulus too small for the requested depth.
class RingError : public Error {
  public:
    using Error::Error;
};

/// Symbolic computation exceeded its configured term ceiling.
class ResourceLimit : public Error {
  public:
    using Error::Error;
};

/// Malformed system file, hit log, checkpoint or certificate.
class FormatError : public Error {
  public:
    using Error::Error;
};

}  // namespace focal
