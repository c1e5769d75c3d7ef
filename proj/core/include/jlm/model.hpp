#pragma once

#include "jlm/opalg.hpp"
#include "jlm/scalar.hpp"

namespace jlm {

/// Two-level atom coupled to a single cavity mode. Frequencies are exact
/// rationals of a common unit so resonance conditions can be tested exactly;
/// the coupling λ never enters a resonance test and stays a double.
struct ModelSpec {
  Rational omega_e{1};
  Rational omega_c{1};
  double lambda = 0.0;
  bool rwa = false;  // false: Rabi, true: Jaynes-Cummings

  /// Throws ConfigError unless omega_e > 0, omega_c > 0, lambda >= 0.
  void validate() const;
};

/// (ωe/2) σz + ωc n̂, grade λ^0.
OperatorExpr free_hamiltonian(const ModelSpec& model);

/// λ σx ⊗ (a + a†) for the Rabi model, λ (σ+ a + σ- a†) under the RWA.
/// Carried at grade λ^1 with unit coefficients.
OperatorExpr interaction_hamiltonian(const ModelSpec& model);

}  // namespace jlm
