#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jlm/model.hpp"
#include "jlm/opalg.hpp"
#include "jlm/scalar.hpp"

namespace jlm {

/// An elementary one-photon joint light-matter transition: a single term
/// σ± ⊗ (a or a†) at grade λ^1, together with its exact detuning eigenvalue
/// under the free Liouvillian, [op, H_free] = δ · op.
struct JLMTransition {
  OperatorExpr op;
  Rational detuning;
  int atom_from = 0;  // 0 = g, 1 = e
  int atom_to = 0;
  bool creates_photon = false;
  std::string detuning_symbol;  // fixed symbolic form, e.g. "ω_c−ω_e"
};

/// The elementary transitions of the interaction Hamiltonian: 4 for the Rabi
/// model, 2 under the RWA. Order is fixed (σ+a, σ+a†, σ-a†, σ-a; RWA keeps
/// the co-rotating pair).
std::vector<JLMTransition> extract_zeroth_order(const ModelSpec& model);

/// Eigenvalue δ with commutator(op, H_free) = δ·op, verified exactly.
/// Throws NotEigenoperator otherwise (including op == 0).
Rational detuning_of(const OperatorExpr& op, const ModelSpec& model);

enum class Placement : std::uint8_t { left, right };

/// An individual detuning δ with its symbolic regularizer index; the θ are
/// pairwise distinct positive infinitesimals, so cumulative sums Θ_l never
/// collide and partial fractions stay first-order. The θ→0 limit is taken
/// analytically in the weights module.
struct RegularizedDetuning {
  Rational delta;
  int theta_index = 0;
};

/// One perturbative pathway: n+1 elementary transitions in perturbation
/// order, each perturbing transition multiplying the growing product on the
/// left or on the right. The composite operator is stored without the
/// placement sign (−1)^{N_L}; n_left carries it.
struct Diagram {
  int order = 0;
  std::vector<JLMTransition> sequence;   // size order+1, perturbation order
  std::vector<Placement> placements;     // size order, for sequence[1..]
  int n_left = 0;
  std::vector<Rational> cumulative;      // Δ_0..Δ_n, running sums of δ
  OperatorExpr composite;

  std::vector<RegularizedDetuning> regularized_detunings() const;
};

/// All diagrams producing one composite operator. total_detuning is the
/// shared Δ_n, equal to the composite's eigenvalue under the free Liouvillian.
struct DiagramGroup {
  OperatorExpr composite;
  Rational total_detuning;
  std::vector<Diagram> diagrams;
};

/// Enumerates every (sequence, placements) combination of order+1 zeroth-order
/// transitions whose composite operator is non-zero, grouped by the canonical
/// form of the composite. Deterministic: groups are sorted by composite,
/// diagrams within a group by sequence then placements.
std::vector<DiagramGroup> enumerate_diagrams(const ModelSpec& model, int order);

/// Deterministic text rendering: one line per step with the atomic hop, the
/// photon action, the placement, and the running cumulative detuning.
std::string render_diagram(const Diagram& d);

}  // namespace jlm
