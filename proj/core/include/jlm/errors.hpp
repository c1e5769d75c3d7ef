#pragma once

#include <stdexcept>
#include <string>

namespace jlm {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An operator expression is not an eigenoperator of the free Liouvillian.
struct NotEigenoperator : Error {
  using Error::Error;
};

/// Two cumulative detunings coincide exactly; the partial-fraction weight has
/// a pole that this library deliberately does not renormalize away.
struct DegenerateDetunings : Error {
  using Error::Error;
};

/// A one-photon detuning is exactly zero where a dispersive weight needs its
/// reciprocal.
struct ZeroDetuning : Error {
  using Error::Error;
};

struct UnknownState : Error {
  using Error::Error;
};

struct NoSolution : Error {
  using Error::Error;
};

struct NoPeak : Error {
  using Error::Error;
};

struct LeakageExceeded : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

}  // namespace jlm
