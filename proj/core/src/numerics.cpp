#include "jlm/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "jlm/errors.hpp"

namespace jlm {

Eigen::MatrixXcd build_full_hamiltonian(const ModelSpec& model, const FockConfig& cfg) {
  const OperatorExpr h = free_hamiltonian(model) + interaction_hamiltonian(model);
  return to_matrix(h, cfg.n_max, model.lambda).matrix;
}

Trajectory evolve(const Eigen::MatrixXcd& hamiltonian, const Eigen::VectorXcd& psi0,
                  std::span<const double> times, const FockConfig& cfg) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hamiltonian);
  const Eigen::MatrixXcd& vectors = solver.eigenvectors();
  const Eigen::VectorXd& energies = solver.eigenvalues();
  const Eigen::VectorXcd coefficients = vectors.adjoint() * psi0;

  const int dim = static_cast<int>(hamiltonian.rows());
  const int n_max = dim / 2 - 1;
  Trajectory out;
  out.times.assign(times.begin(), times.end());
  out.populations.resize(static_cast<long>(times.size()), dim);

  Eigen::VectorXcd phases(dim);
  for (size_t ti = 0; ti < times.size(); ++ti) {
    const double t = times[ti];
    for (int k = 0; k < dim; ++k) {
      phases(k) = std::exp(std::complex<double>{0.0, -energies(k) * t}) * coefficients(k);
    }
    const Eigen::VectorXcd psi = vectors * phases;
    double leakage = 0.0;
    for (int i = 0; i < dim; ++i) {
      const double p = std::norm(psi(i));
      out.populations(static_cast<long>(ti), i) = p;
      if (i / 2 >= n_max - 1) leakage += p;
    }
    out.max_leakage = std::max(out.max_leakage, leakage);
    if (leakage > cfg.leakage_tolerance) {
      throw LeakageExceeded("population " + std::to_string(leakage) +
                            " in the top two Fock levels at t = " + std::to_string(t) +
                            "; raise n_max");
    }
  }
  return out;
}

double extract_frequency(std::span<const double> times, std::span<const double> signal) {
  const size_t n = signal.size();
  if (n < 8 || times.size() != n) throw NoPeak("signal too short");
  const double dt = (times.back() - times.front()) / static_cast<double>(n - 1);

  double mean = 0.0;
  for (const double s : signal) mean += s;
  mean /= static_cast<double>(n);

  std::vector<double> windowed(n);
  double signal_scale = 0.0;
  for (size_t j = 0; j < n; ++j) {
    const double hann =
        0.5 * (1.0 - std::cos(2.0 * std::numbers::pi * static_cast<double>(j) /
                              static_cast<double>(n - 1)));
    windowed[j] = hann * (signal[j] - mean);
    signal_scale = std::max(signal_scale, std::abs(signal[j]));
  }

  const size_t half = n / 2;
  std::vector<double> magnitude(half + 1, 0.0);
  for (size_t k = 1; k <= half; ++k) {
    std::complex<double> acc{0.0, 0.0};
    const double step = -2.0 * std::numbers::pi * static_cast<double>(k) /
                        static_cast<double>(n);
    for (size_t j = 0; j < n; ++j) {
      acc += windowed[j] * std::exp(std::complex<double>{0.0, step * static_cast<double>(j)});
    }
    magnitude[k] = std::abs(acc);
  }

  size_t peak = 1;
  for (size_t k = 2; k < half; ++k) {
    if (magnitude[k] > magnitude[peak]) peak = k;
  }
  // Flat-spectrum guard relative to the raw signal scale, so a constant
  // signal (whose de-meaned residue is rounding noise) is rejected.
  if (magnitude[peak] <= 1e-12 * static_cast<double>(n) * signal_scale + 1e-300) {
    throw NoPeak("spectrum is flat");
  }

  // Parabolic interpolation on the log magnitude of the three bins around
  // the peak; falls back to the bin center at the spectrum edges.
  double correction = 0.0;
  if (peak > 1 && peak + 1 <= half && magnitude[peak - 1] > 0 && magnitude[peak + 1] > 0) {
    const double a = std::log(magnitude[peak - 1]);
    const double b = std::log(magnitude[peak]);
    const double c = std::log(magnitude[peak + 1]);
    const double denom = a - 2.0 * b + c;
    if (denom < 0) correction = std::clamp(0.5 * (a - c) / denom, -0.5, 0.5);
  }
  return 2.0 * std::numbers::pi * (static_cast<double>(peak) + correction) /
         (static_cast<double>(n) * dt);
}

OperatorSpaceMatrix operator_space_matrix(double delta, double lambda, bool dressed) {
  OperatorSpaceMatrix out;
  out.dressed = dressed;
  if (dressed) {
    out.labels = {"n_c", "pi", "sigma+ a", "sigma- a+"};
    out.entries << 0, 0, -lambda, lambda,
                   0, 0, 2 * lambda, -2 * lambda,
                   0, lambda, delta, 0,
                   0, -lambda, 0, -delta;
  } else {
    out.labels = {"sigma_z", "n_c", "sigma+ a", "sigma- a+"};
    out.entries << 0, 0, 2 * lambda, -2 * lambda,
                   0, 0, -lambda, lambda,
                   lambda / 2, 0, delta, 0,
                   -lambda / 2, 0, 0, -delta;
  }
  return out;
}

Eigen::Matrix4d projector_p_omega(double delta, double lambda) {
  const double omega_sq = delta * delta + 4.0 * lambda * lambda;
  if (omega_sq == 0.0) throw Error("P_Omega is undefined at delta = lambda = 0");
  const Eigen::Matrix4d m = operator_space_matrix(delta, lambda, true).entries;
  return m * m / omega_sq;
}

namespace {

std::vector<std::complex<double>> overlap_series_at(const ModelSpec& model, int n_max,
                                                    int interior_photons,
                                                    const OperatorExpr& target,
                                                    const JLMTransition& source,
                                                    std::span<const double> times) {
  const FockConfig cfg{n_max, 1.0};
  const Eigen::MatrixXcd h = build_full_hamiltonian(model, cfg);
  const Eigen::MatrixXcd xi0 = to_matrix(source.op, n_max, 1.0).matrix;
  const Eigen::MatrixXcd tgt = to_matrix(target, n_max, 1.0).matrix;

  const int dim = static_cast<int>(h.rows());
  const int interior = 2 * (interior_photons + 1);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
  const Eigen::MatrixXcd& vectors = solver.eigenvectors();
  const Eigen::VectorXd& energies = solver.eigenvalues();
  const Eigen::MatrixXcd xi_eigen = vectors.adjoint() * xi0 * vectors;

  const auto inner = [&](const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    return (a.topLeftCorner(interior, interior).adjoint() *
            b.topLeftCorner(interior, interior))
        .trace();
  };
  const std::complex<double> norm = inner(tgt, tgt);

  std::vector<std::complex<double>> out;
  out.reserve(times.size());
  Eigen::MatrixXcd phased(dim, dim);
  for (const double t : times) {
    for (int a = 0; a < dim; ++a) {
      for (int b = 0; b < dim; ++b) {
        phased(a, b) =
            std::exp(std::complex<double>{0.0, (energies(a) - energies(b)) * t}) *
            xi_eigen(a, b);
      }
    }
    const Eigen::MatrixXcd xi_t = vectors * phased * vectors.adjoint();
    out.push_back(inner(tgt, xi_t) / norm);
  }
  return out;
}

}  // namespace

std::vector<std::complex<double>> heisenberg_overlap_series(
    const ModelSpec& model, const FockConfig& cfg, const OperatorExpr& target,
    const JLMTransition& source, std::span<const double> times, int interior_photons) {
  if (cfg.n_max < 8) throw Error("heisenberg_overlap needs n_max >= 8");
  if (interior_photons < 0) {
    // Smallest window that resolves the target's photon structure.
    for (const auto& t : target.terms()) {
      interior_photons = std::max({interior_photons, t.bosonic.create_power,
                                   t.bosonic.annihilate_power});
    }
    interior_photons = std::max(interior_photons, 1);
  }
  if (interior_photons > cfg.n_max - 6) {
    throw Error("interior window too close to the truncation; raise n_max");
  }
  // Convergence guard: the same interior window computed at two truncations
  // must agree, otherwise amplitude is reaching the top of the Fock space.
  const auto full =
      overlap_series_at(model, cfg.n_max, interior_photons, target, source, times);
  const auto reduced =
      overlap_series_at(model, cfg.n_max - 2, interior_photons, target, source, times);
  double scale = 0.0, diff = 0.0;
  for (size_t i = 0; i < full.size(); ++i) {
    scale = std::max(scale, std::abs(full[i]));
    diff = std::max(diff, std::abs(full[i] - reduced[i]));
  }
  if (diff > 1e-6 * scale + 1e-12) {
    throw LeakageExceeded("Heisenberg overlap not converged in n_max (drift " +
                          std::to_string(diff) + "); raise n_max");
  }
  return full;
}

std::complex<double> heisenberg_overlap(const ModelSpec& model, const FockConfig& cfg,
                                        const OperatorExpr& target,
                                        const JLMTransition& source, double t,
                                        int interior_photons) {
  const double times[] = {t};
  return heisenberg_overlap_series(model, cfg, target, source, times, interior_photons)
      .front();
}

}  // namespace jlm
