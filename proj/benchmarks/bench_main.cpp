#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "jlm/diagrams.hpp"
#include "jlm/effective.hpp"
#include "jlm/model.hpp"
#include "jlm/numerics.hpp"
#include "jlm/opalg.hpp"
#include "jlm/weights.hpp"

namespace {

jlm::ModelSpec three_photon() { return {jlm::Rational{1}, jlm::Rational{1, 3}, 0.03, false}; }

jlm::OperatorExpr random_expr(std::mt19937& rng, int terms) {
  std::uniform_int_distribution<int> unit(0, 3);
  std::uniform_int_distribution<int> power(0, 3);
  std::uniform_int_distribution<int> numer(-9, 9);
  jlm::OperatorExpr expr;
  for (int i = 0; i < terms; ++i) {
    const int u = unit(rng);
    expr += jlm::Scalar{jlm::Rational{numer(rng), 7}} *
            jlm::OperatorExpr::single(jlm::Scalar{1}, 0,
                                      jlm::AtomicBlock::unit(u / 2, u % 2),
                                      {power(rng), power(rng)});
  }
  return expr;
}

void BM_Multiply(benchmark::State& state) {
  std::mt19937 rng(1);
  const jlm::OperatorExpr a = random_expr(rng, static_cast<int>(state.range(0)));
  const jlm::OperatorExpr b = random_expr(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(jlm::multiply(a, b));
  }
}
BENCHMARK(BM_Multiply)->Arg(4)->Arg(16);

void BM_Commutator(benchmark::State& state) {
  std::mt19937 rng(2);
  const jlm::OperatorExpr a = random_expr(rng, 8);
  const jlm::OperatorExpr b = random_expr(rng, 8);
  for (auto _ : state) {
    benchmark::DoNotOptimize(jlm::commutator(a, b));
  }
}
BENCHMARK(BM_Commutator);

void BM_EnumerateDiagrams(benchmark::State& state) {
  const jlm::ModelSpec model = three_photon();
  for (auto _ : state) {
    benchmark::DoNotOptimize(jlm::enumerate_diagrams(model, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_EnumerateDiagrams)->Arg(1)->Arg(2)->Arg(3);

void BM_BuildCorrection(benchmark::State& state) {
  const jlm::ModelSpec model = three_photon();
  for (auto _ : state) {
    benchmark::DoNotOptimize(jlm::build_correction(model, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_BuildCorrection)->Arg(1)->Arg(2);

void BM_VnGeneral(benchmark::State& state) {
  std::vector<jlm::RegularizedDetuning> deltas{
      {jlm::Rational{13, 7}, 0}, {jlm::Rational{-2, 3}, 1}, {jlm::Rational{5, 11}, 2},
      {jlm::Rational{1, 2}, 3}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(jlm::v_n_general(deltas, 1, 3.7));
  }
}
BENCHMARK(BM_VnGeneral);

void BM_VnQuadratureOracle(benchmark::State& state) {
  const std::vector<double> deltas{1.0, -0.5, 2.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(jlm::v_n_quadrature_oracle(deltas, 1, 3.7));
  }
}
BENCHMARK(BM_VnQuadratureOracle);

void BM_FullHamiltonianEvolve(benchmark::State& state) {
  const jlm::ModelSpec model = three_photon();
  const jlm::FockConfig cfg{static_cast<int>(state.range(0)), 1.0};
  const Eigen::MatrixXcd h = jlm::build_full_hamiltonian(model, cfg);
  Eigen::VectorXcd psi0 = Eigen::VectorXcd::Zero(h.rows());
  psi0(jlm::state_index(1, 0)) = 1.0;
  std::vector<double> times(256);
  for (size_t i = 0; i < times.size(); ++i) times[i] = 100.0 * i;
  for (auto _ : state) {
    benchmark::DoNotOptimize(jlm::evolve(h, psi0, times, cfg));
  }
}
BENCHMARK(BM_FullHamiltonianEvolve)->Arg(15)->Arg(30);

void BM_ExtractFrequency(benchmark::State& state) {
  std::vector<double> times(2048), signal(2048);
  for (size_t i = 0; i < times.size(); ++i) {
    times[i] = i * 0.37;
    signal[i] = std::pow(std::sin(0.05 * times[i]), 2);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(jlm::extract_frequency(times, signal));
  }
}
BENCHMARK(BM_ExtractFrequency);

}  // namespace

BENCHMARK_MAIN();
