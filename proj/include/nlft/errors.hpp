#pragma once

#include <stdexcept>
#include <string>

namespace nlft {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two fields (or a field and a lattice) that must share geometry do not.
class LatticeMismatch : public Error {
 public:
  using Error::Error;
};

/// A spectral lattice reaches outside the band a position lattice resolves.
class NyquistViolation : public Error {
 public:
  using Error::Error;
};

/// Spectral spacing is not a rational multiple of the padded DFT frequency step.
class IncommensurateLattices : public Error {
 public:
  using Error::Error;
};

/// Too many spectral nodes failed to converge for the data to be used.
class ExcessiveHoles : public Error {
 public:
  using Error::Error;
};

/// Time step too coarse for the resolved linear phase.
class CflViolation : public Error {
 public:
  using Error::Error;
};

/// Requested times exceed the interval before periodic wrap-around.
class WindowViolation : public Error {
 public:
  using Error::Error;
};

/// Malformed or truncated NLF2 container.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace nlft
