#pragma once

#include <stdexcept>
#include <string>

namespace matalg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

/// A hypothesis on the diagonal spectrum failed.
class InvalidSpectrum : public Error {
 public:
  enum class Reason { NotDistinct, ZeroEigenvalue };

  InvalidSpectrum(Reason reason, std::string const& what)
      : Error(what), reason_(reason) {}

  Reason reason() const noexcept { return reason_; }

 private:
  Reason reason_;
};

/// A size guard tripped (enumeration caps, exhaustive scans).
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace matalg
