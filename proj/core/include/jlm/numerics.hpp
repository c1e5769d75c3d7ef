#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <span>
#include <string>
#include <vector>

#include "jlm/diagrams.hpp"
#include "jlm/model.hpp"
#include "jlm/opalg.hpp"

namespace jlm {

struct FockConfig {
  int n_max = 15;
  double leakage_tolerance = 1e-8;
};

/// Hermitian matrix of H_free + H_int on the truncated space, dimension
/// 2(n_max+1), basis {|g,0>,|e,0>,|g,1>,...,|e,n_max>}.
Eigen::MatrixXcd build_full_hamiltonian(const ModelSpec& model, const FockConfig& cfg);

inline int state_index(int atom, int photons) { return 2 * photons + atom; }

struct Trajectory {
  std::vector<double> times;
  Eigen::MatrixXd populations;  // row = time index, col = basis state
  double max_leakage = 0.0;
};

/// Time evolution by full eigendecomposition (no step error). Aborts with
/// LeakageExceeded when population in the top two Fock levels passes
/// cfg.leakage_tolerance at any sampled time.
Trajectory evolve(const Eigen::MatrixXcd& hamiltonian, const Eigen::VectorXcd& psi0,
                  std::span<const double> times, const FockConfig& cfg);

/// Dominant angular frequency of a uniformly sampled real signal, via a
/// Hann-windowed DFT with parabolic peak interpolation. Throws NoPeak for a
/// flat spectrum. The signal should cover at least a few oscillation periods.
double extract_frequency(std::span<const double> times, std::span<const double> signal);

/// Closed equation-of-motion matrix of the Jaynes-Cummings model on a
/// four-operator set, [X_i, H] ≈ Σ_j M_ij X_j after dropping identities and
/// higher products. dressed = true uses π = σz/2 + σz·n_c in place of σz.
struct OperatorSpaceMatrix {
  std::array<std::string, 4> labels;
  Eigen::Matrix4d entries;
  bool dressed = false;
};
OperatorSpaceMatrix operator_space_matrix(double delta, double lambda, bool dressed);

/// P_Ω = M²/Ω², Ω² = Δ² + 4λ²; projects onto the ±Ω eigenspaces of the
/// dressed matrix. Undefined at Δ = λ = 0.
Eigen::Matrix4d projector_p_omega(double delta, double lambda);

/// Hilbert-Schmidt coefficient of `target` inside the Heisenberg evolution of
/// the source transition, ξ(t) = U†(t) ξ U(t), both realized at unit λ grade
/// and projected on an interior photon window. The default window is the
/// smallest one that resolves the target; wider windows fold in higher
/// normal-ordered components of ξ(t), whose weights grow with photon number
/// and bias the extracted coefficient at higher orders in λ. Throws
/// LeakageExceeded when the result is not converged in n_max.
std::vector<std::complex<double>> heisenberg_overlap_series(
    const ModelSpec& model, const FockConfig& cfg, const OperatorExpr& target,
    const JLMTransition& source, std::span<const double> times,
    int interior_photons = -1);
std::complex<double> heisenberg_overlap(const ModelSpec& model, const FockConfig& cfg,
                                        const OperatorExpr& target,
                                        const JLMTransition& source, double t,
                                        int interior_photons = -1);

}  // namespace jlm
