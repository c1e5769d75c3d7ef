#include "jlm/weights.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>

#include "jlm/errors.hpp"

namespace jlm {

namespace {

std::complex<double> phase_factor(const Rational& detuning, double t) {
  return std::exp(std::complex<double>{0.0, -to_double(detuning) * t});
}

void merge_term(std::map<Rational, Scalar>& acc, const Rational& phase, const Scalar& amp) {
  auto [it, inserted] = acc.emplace(phase, amp);
  if (!inserted) {
    it->second += amp;
    if (it->second.is_zero()) acc.erase(it);
  }
}

}  // namespace

std::complex<double> evaluate(const WeightResult& w, double t) {
  std::complex<double> acc = w.coefficient.to_complex() * phase_factor(w.phase_detuning, t);
  for (const auto& [detuning, amp] : w.transient_terms) {
    acc += amp.to_complex() * phase_factor(detuning, t);
  }
  return acc;
}

WeightResult coarse_grain(const WeightResult& full, std::optional<double> time_threshold) {
  WeightResult out;
  out.phase_detuning = full.phase_detuning;
  out.coefficient = full.coefficient;
  out.lambda_power = full.lambda_power;
  if (time_threshold) {
    for (const auto& term : full.transient_terms) {
      if (std::abs(to_double(term.first)) * *time_threshold < 1.0) {
        out.transient_terms.push_back(term);
      }
    }
  }
  return out;
}

std::vector<std::pair<Rational, Scalar>> v_n_residues(
    std::span<const RegularizedDetuning> deltas, int n_left) {
  std::vector<Rational> cumulative;
  cumulative.reserve(deltas.size());
  Rational running{0};
  for (const auto& d : deltas) {
    running += d.delta;
    cumulative.push_back(running);
  }
  for (size_t l = 0; l < cumulative.size(); ++l) {
    for (size_t k = l + 1; k < cumulative.size(); ++k) {
      if (cumulative[l] == cumulative[k]) {
        throw DegenerateDetunings("cumulative detunings Δ_" + std::to_string(l) + " and Δ_" +
                                  std::to_string(k) + " coincide at " +
                                  to_string(cumulative[l]));
      }
    }
  }
  const Rational sign = (n_left % 2 == 0) ? 1 : -1;
  std::vector<std::pair<Rational, Scalar>> out;
  out.reserve(cumulative.size());
  for (size_t l = 0; l < cumulative.size(); ++l) {
    Rational residue = sign;
    for (size_t k = 0; k < cumulative.size(); ++k) {
      if (k != l) residue /= cumulative[l] - cumulative[k];
    }
    out.emplace_back(cumulative[l], Scalar{residue});
  }
  return out;
}

std::complex<double> v_n_general(std::span<const RegularizedDetuning> deltas, int n_left,
                                 double t) {
  std::complex<double> acc{0.0, 0.0};
  for (const auto& [detuning, amp] : v_n_residues(deltas, n_left)) {
    acc += amp.to_complex() * phase_factor(detuning, t);
  }
  return acc;
}

namespace {

// Gauss-Legendre nodes/weights on [-1, 1], cached per order. Newton on
// Legendre polynomials; plenty for the phases this oracle sees.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

const GaussRule& gauss_rule(int order) {
  static std::map<int, GaussRule> cache;
  auto it = cache.find(order);
  if (it != cache.end()) return it->second;
  GaussRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  for (int i = 0; i < order; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= order; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[i] = x;
    rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return cache.emplace(order, std::move(rule)).first->second;
}

// I_k(τ) = ∫_0^τ e^{i a_k s} I_{k-1}(s) ds with I_0 = 1, evaluated by nested
// fixed-order Gauss-Legendre.
std::complex<double> nested_integral(std::span<const double> phases, size_t level,
                                     double upper, int order) {
  if (level == 0) return {1.0, 0.0};
  const GaussRule& rule = gauss_rule(order);
  const double half = 0.5 * upper;
  std::complex<double> acc{0.0, 0.0};
  for (int i = 0; i < order; ++i) {
    const double s = half * (rule.nodes[i] + 1.0);
    acc += rule.weights[i] *
           std::exp(std::complex<double>{0.0, phases[level - 1] * s}) *
           nested_integral(phases, level - 1, s, order);
  }
  return half * acc;
}

}  // namespace

std::complex<double> v_n_quadrature_oracle(std::span<const double> deltas, int n_left,
                                           double t) {
  const int n = static_cast<int>(deltas.size()) - 1;
  if (n == 0) return std::exp(std::complex<double>{0.0, -deltas[0] * t});
  // Factor every exponential: the integrand over 0 ≤ τ_1 ≤ ... ≤ τ_n ≤ t
  // becomes e^{-iΔ_n t} Π_k e^{i δ_k τ_k}, leaving pure nested exponentials.
  std::vector<double> phases(deltas.begin() + 1, deltas.end());
  double total = 0.0;
  for (const double d : deltas) total += d;
  std::complex<double> prefactor = std::exp(std::complex<double>{0.0, -total * t});
  constexpr std::complex<double> minus_i_powers[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
  prefactor *= minus_i_powers[n % 4];
  if (n_left % 2 != 0) prefactor = -prefactor;

  std::complex<double> coarse = nested_integral(phases, phases.size(), t, 48);
  for (int order = 96; order <= 384; order *= 2) {
    const std::complex<double> fine = nested_integral(phases, phases.size(), t, order);
    if (std::abs(fine - coarse) < 1e-11) {
      coarse = fine;
      break;
    }
    coarse = fine;
  }
  return prefactor * coarse;
}

std::complex<double> v1_total(const Rational& delta_i, const Rational& delta_j, double t) {
  return evaluate(v1_full(delta_i, delta_j), t);
}

WeightResult v1_full(const Rational& delta_i, const Rational& delta_j) {
  WeightResult w = v1_coarse(delta_i, delta_j);
  std::map<Rational, Scalar> transients;
  const Rational half{1, 2};
  merge_term(transients, delta_i, Scalar{half * reciprocal(delta_j)});
  merge_term(transients, delta_j, Scalar{-half * reciprocal(delta_i)});
  w.transient_terms.assign(transients.begin(), transients.end());
  return w;
}

WeightResult v1_coarse(const Rational& delta_i, const Rational& delta_j) {
  if (delta_i == 0 || delta_j == 0) {
    throw ZeroDetuning("one-photon detuning vanishes in first-order weight");
  }
  WeightResult w;
  w.phase_detuning = delta_i + delta_j;
  w.coefficient = Scalar{(reciprocal(delta_i) - reciprocal(delta_j)) / 2};
  w.lambda_power = 2;
  return w;
}

std::complex<double> v2_total(const Rational& delta_i, const Rational& delta_j,
                              const Rational& delta_k, double t) {
  return evaluate(v2_full(delta_i, delta_j, delta_k), t);
}

WeightResult v2_full(const Rational& delta_i, const Rational& delta_j,
                     const Rational& delta_k) {
  WeightResult w = v2_coarse(delta_i, delta_j, delta_k);
  const Rational third{1, 3};
  std::map<Rational, Scalar> transients;
  merge_term(transients, delta_i,
             Scalar{third * reciprocal(delta_j * (delta_j + delta_k))});
  merge_term(transients, delta_k,
             Scalar{third * reciprocal(delta_j * (delta_i + delta_j))});
  merge_term(transients, delta_j, Scalar{-third * reciprocal(delta_i * delta_k)});
  merge_term(transients, delta_i + delta_j,
             Scalar{third * reciprocal(delta_k) *
                    (reciprocal(delta_i) - reciprocal(delta_j))});
  merge_term(transients, delta_k + delta_j,
             Scalar{third * reciprocal(delta_i) *
                    (reciprocal(delta_k) - reciprocal(delta_j))});
  // A transient phase can coincide with the resonant phase (δj = −δi−δk has
  // no pole); fold it into the leading coefficient to keep phases unique.
  if (auto it = transients.find(w.phase_detuning); it != transients.end()) {
    w.coefficient += it->second;
    transients.erase(it);
  }
  w.transient_terms.assign(transients.begin(), transients.end());
  return w;
}

WeightResult v2_coarse(const Rational& delta_i, const Rational& delta_j,
                       const Rational& delta_k) {
  if (delta_i == 0 || delta_j == 0 || delta_k == 0) {
    throw DegenerateDetunings("one-photon detuning vanishes in second-order weight");
  }
  if (delta_i + delta_j == 0 || delta_k + delta_j == 0) {
    throw DegenerateDetunings("intermediate cumulative detuning vanishes (δj = −δi or δj = −δk)");
  }
  WeightResult w;
  w.phase_detuning = delta_i + delta_j + delta_k;
  const Rational third{1, 3};
  w.coefficient =
      Scalar{third * (reciprocal(delta_i * (delta_i + delta_j)) +
                      reciprocal(delta_k * (delta_k + delta_j)) -
                      reciprocal(delta_i * delta_k))};
  w.lambda_power = 3;
  return w;
}

}  // namespace jlm
