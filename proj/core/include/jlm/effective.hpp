#pragma once

#include <Eigen/Dense>

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "jlm/diagrams.hpp"
#include "jlm/model.hpp"
#include "jlm/opalg.hpp"

namespace jlm {

/// Order-n correction to the interaction Hamiltonian after coarse-graining:
/// only composites with exactly zero cumulative detuning survive, with their
/// ordering-averaged weights attached. Off-resonant composites are listed
/// with their detunings; the constant energy term (multiple of the identity)
/// removed from the resonant part is kept for audit.
struct EffectiveCorrection {
  int order = 0;
  OperatorExpr resonant_terms;
  OperatorExpr identity_dropped;
  std::vector<std::pair<OperatorExpr, Rational>> discarded_terms;

  /// Resonant operator including the constant part; this is what enters
  /// subspace projections, where absolute level shifts matter.
  OperatorExpr resonant_full() const { return resonant_terms + identity_dropped; }
};

/// Assembles ΔH^(n) for 0 ≤ n ≤ 2. Throws DegenerateDetunings / ZeroDetuning
/// (naming the offending composite) when a resonant composite sits on a pole
/// of its weight, e.g. at one-photon resonance.
EffectiveCorrection build_correction(const ModelSpec& model, int order);

struct BareState {
  int atom = 0;  // 0 = g, 1 = e
  int photons = 0;
  friend bool operator==(const BareState&, const BareState&) = default;
};

/// Accepts "e,0", "g,3", or the bra-ket sugar "|e,0>". Throws UnknownState.
BareState parse_state_label(std::string_view label);
std::string to_string(const BareState& s);

/// One entry contribution: coeff · sqrt(sqrt_factor) · λ^lambda_power with
/// sqrt_factor squarefree, so irrational bosonic matrix elements stay exact.
struct SubspaceEntryTerm {
  Scalar coeff;
  long long sqrt_factor = 1;
  int lambda_power = 0;
};

/// Matrix of H_free + Σ corrections on a list of bare states, with exact
/// symbolic entries.
class SubspaceMatrix {
 public:
  explicit SubspaceMatrix(std::vector<BareState> basis);

  const std::vector<BareState>& basis() const { return basis_; }
  const std::vector<SubspaceEntryTerm>& entry(int row, int col) const;
  void add_term(int row, int col, const SubspaceEntryTerm& term);

  Eigen::MatrixXcd evaluate(double lambda) const;
  /// Exact check that the symbolic matrix equals its conjugate transpose.
  bool is_hermitian() const;

 private:
  std::vector<BareState> basis_;
  std::vector<std::vector<SubspaceEntryTerm>> entries_;  // row-major
};

SubspaceMatrix project_subspace(std::span<const EffectiveCorrection> corrections,
                                const ModelSpec& model, std::span<const BareState> basis);

/// ω_c solving the shift-corrected resonance between two bare states,
/// ω_c* = base + lambda2_coeff·λ², with the first-order shifts evaluated at
/// the bare crossing. Exact rational coefficients.
struct ResonanceCondition {
  Rational base;
  Rational lambda2_coeff;

  double evaluate(double lambda) const;
  /// λ converts exactly to a rational, so the corrected frequency stays an
  /// exact rational of the base unit.
  Rational evaluate_exact(double lambda) const;
};

/// Throws NoSolution when the bare energies never cross or when no computed
/// correction (order ≤ 2) connects the pair.
ResonanceCondition resonance_condition(const ModelSpec& model, const BareState& a,
                                       const BareState& b);

}  // namespace jlm
