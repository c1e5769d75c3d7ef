#pragma once

#include <complex>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "jlm/diagrams.hpp"
#include "jlm/scalar.hpp"

namespace jlm {

/// Time weight of a composite transition operator, organized by phase:
///   W(t)/λ^p = coefficient · e^{-i·phase_detuning·t} + Σ amp_k · e^{-i·δ_k·t}.
/// Coarse-grained results keep only the leading phase and have empty
/// transient_terms; the static prefactors are exact rationals.
struct WeightResult {
  Rational phase_detuning;
  Scalar coefficient;
  int lambda_power = 0;
  std::vector<std::pair<Rational, Scalar>> transient_terms;
};

/// Evaluates the full form at time t (without the λ^p factor).
std::complex<double> evaluate(const WeightResult& w, double t);

/// Algebraic coarse-graining: drops every transient whose detuning is a
/// non-zero rational. With a time threshold T (exploratory mode, off by
/// default) a transient survives when |δ|·T < 1, i.e. it is slow on the
/// observation time.
WeightResult coarse_grain(const WeightResult& full,
                          std::optional<double> time_threshold = {});

/// Un-averaged weight of a single order-n diagram,
///   v_n(t) = (−1)^{N_L} Σ_l e^{−iΔ_l t} Π_{k≠l} 1/(Δ_l − Δ_k),
/// with Δ_l the cumulative sums of the given individual detunings and the
/// θ → 0 limit already taken. Residues cancel exactly in rational arithmetic
/// before any floating evaluation. Throws DegenerateDetunings if two
/// cumulative detunings coincide as rationals (the limit would leave a pole).
std::complex<double> v_n_general(std::span<const RegularizedDetuning> deltas, int n_left,
                                 double t);

/// Exact residues of v_n as (cumulative detuning, amplitude) pairs, sign
/// included. Same degeneracy contract as v_n_general.
std::vector<std::pair<Rational, Scalar>> v_n_residues(
    std::span<const RegularizedDetuning> deltas, int n_left);

/// Brute-force evaluation of the nested time-ordered integral defining
/// v_n(t), by adaptive (order-doubling) Gauss-Legendre quadrature nested per
/// axis; absolute error target 1e-10. Independent of the partial-fraction
/// route; intended for n ≤ 3.
std::complex<double> v_n_quadrature_oracle(std::span<const double> deltas, int n_left,
                                           double t);

/// Ordering-averaged first-order weight (time part of W_1/λ²):
///   V1(t) = ½([e^{−iδi t}/δj − e^{−iδj t}/δi] + e^{−i(δi+δj)t}[1/δi − 1/δj]).
/// Throws ZeroDetuning if either input vanishes.
std::complex<double> v1_total(const Rational& delta_i, const Rational& delta_j, double t);
WeightResult v1_full(const Rational& delta_i, const Rational& delta_j);
WeightResult v1_coarse(const Rational& delta_i, const Rational& delta_j);

/// Ordering-averaged second-order weight; coarse coefficient
///   ⅓[1/(δi(δi+δj)) + 1/(δk(δk+δj)) − 1/(δiδk)], phase δi+δj+δk.
/// Throws DegenerateDetunings when a detuning vanishes or δi = −δj or
/// δk = −δj (pole of the averaged weight).
std::complex<double> v2_total(const Rational& delta_i, const Rational& delta_j,
                              const Rational& delta_k, double t);
WeightResult v2_full(const Rational& delta_i, const Rational& delta_j,
                     const Rational& delta_k);
WeightResult v2_coarse(const Rational& delta_i, const Rational& delta_j,
                       const Rational& delta_k);

}  // namespace jlm
