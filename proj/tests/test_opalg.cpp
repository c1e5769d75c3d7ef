#include <catch2/catch_amalgamated.hpp>

#include <complex>
#include <random>
#include <vector>

#include "jlm/opalg.hpp"

using namespace jlm;

namespace {

// Independent dense realization used as the oracle for normal ordering and
// products: a, a†, and the atomic units are built directly as matrices, with
// no reference to the symbolic engine.
Eigen::MatrixXcd dense_annihilate(int n_max) {
  const int dim = 2 * (n_max + 1);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (int n = 1; n <= n_max; ++n) {
    for (int k = 0; k < 2; ++k) {
      m(2 * (n - 1) + k, 2 * n + k) = std::sqrt(static_cast<double>(n));
    }
  }
  return m;
}

Eigen::MatrixXcd dense_unit(int bra, int ket, int n_max) {
  const int dim = 2 * (n_max + 1);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (int n = 0; n <= n_max; ++n) m(2 * n + bra, 2 * n + ket) = 1.0;
  return m;
}

double interior_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b, int photons) {
  const int dim = 2 * (photons + 1);
  return (a.topLeftCorner(dim, dim) - b.topLeftCorner(dim, dim)).cwiseAbs().maxCoeff();
}

OperatorExpr random_expr(std::mt19937& rng) {
  std::uniform_int_distribution<int> unit(0, 3);
  std::uniform_int_distribution<int> degree(0, 3);
  std::uniform_int_distribution<int> grade(0, 2);
  std::uniform_int_distribution<int> numer(-9, 9);
  std::uniform_int_distribution<int> denom(1, 9);
  std::uniform_int_distribution<int> count(1, 4);
  OperatorExpr expr;
  const int terms = count(rng);
  for (int i = 0; i < terms; ++i) {
    const int total = degree(rng);
    std::uniform_int_distribution<int> split(0, total);
    const int m = split(rng);
    const Scalar coeff{Rational{numer(rng), denom(rng)}, Rational{numer(rng), denom(rng)}};
    const int u = unit(rng);
    expr += coeff * OperatorExpr::single(Scalar{1}, grade(rng),
                                         AtomicBlock::unit(u / 2, u % 2),
                                         BosonicMonomial{m, total - m});
  }
  return expr;
}

}  // namespace

TEST_CASE("two-level algebra") {
  CHECK(OperatorExpr::sigma_p() * OperatorExpr::sigma_m() == OperatorExpr::proj_e());
  CHECK(OperatorExpr::sigma_m() * OperatorExpr::sigma_p() == OperatorExpr::proj_g());
  CHECK((OperatorExpr::sigma_p() * OperatorExpr::sigma_p()).is_zero());
  CHECK(OperatorExpr::sigma_z() == OperatorExpr::proj_e() - OperatorExpr::proj_g());
}

TEST_CASE("bosonic products normal order via [a, a†] = 1") {
  const OperatorExpr a = OperatorExpr::annihilate();
  const OperatorExpr ad = OperatorExpr::create();
  CHECK(a * ad == OperatorExpr::number() + OperatorExpr::identity());
  CHECK(commutator(a, ad) == OperatorExpr::identity());

  const OperatorExpr lhs = (OperatorExpr::sigma_p() * a) * (OperatorExpr::sigma_m() * ad);
  CHECK(lhs == OperatorExpr::proj_e() * (OperatorExpr::number() + OperatorExpr::identity()));
}

TEST_CASE("normal_order rewrites arbitrary sequences") {
  using enum BosonOp;
  const std::vector<BosonOp> a_adag{annihilate, create};
  CHECK(normal_order(a_adag) == OperatorExpr::number() + OperatorExpr::identity());

  const std::vector<BosonOp> already{create, annihilate};
  CHECK(normal_order(already) == OperatorExpr::number());

  // a a† a† = a†a†a + 2a†; frozen after the brute-force matrix check below.
  const std::vector<BosonOp> seq{annihilate, create, create};
  const OperatorExpr expected =
      OperatorExpr::bosonic({2, 1}) + Scalar{2} * OperatorExpr::bosonic({1, 0});
  CHECK(normal_order(seq) == expected);

  const int n_max = 6;
  const Eigen::MatrixXcd a = dense_annihilate(n_max);
  const Eigen::MatrixXcd oracle = a * a.adjoint() * a.adjoint();
  const Eigen::MatrixXcd realized = to_matrix(normal_order(seq), n_max, 1.0).matrix;
  CHECK(interior_diff(oracle, realized, n_max - 3) < 1e-12);
}

TEST_CASE("normal ordering preserves the operator on the interior") {
  std::mt19937 rng(7101);
  std::uniform_int_distribution<int> pick(0, 1);
  std::uniform_int_distribution<int> len(1, 6);
  const int n_max = 10;
  const Eigen::MatrixXcd a = dense_annihilate(n_max);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<BosonOp> seq;
    Eigen::MatrixXcd oracle = Eigen::MatrixXcd::Identity(2 * (n_max + 1), 2 * (n_max + 1));
    const int n = len(rng);
    for (int i = 0; i < n; ++i) {
      if (pick(rng) == 0) {
        seq.push_back(BosonOp::annihilate);
        oracle = oracle * a;
      } else {
        seq.push_back(BosonOp::create);
        oracle = oracle * a.adjoint();
      }
    }
    const Eigen::MatrixXcd realized = to_matrix(normal_order(seq), n_max, 1.0).matrix;
    CHECK(interior_diff(oracle, realized, n_max - 6) < 1e-12);
  }
}

TEST_CASE("commutators against the brute-force matrix oracle") {
  // [σ+⊗a, σ-⊗a†] = |e><e|⊗(a†a+1) − |g><g|⊗a†a
  const OperatorExpr lhs =
      commutator(OperatorExpr::sigma_p() * OperatorExpr::annihilate(),
                 OperatorExpr::sigma_m() * OperatorExpr::create());
  const OperatorExpr expected =
      OperatorExpr::proj_e() * (OperatorExpr::number() + OperatorExpr::identity()) -
      OperatorExpr::proj_g() * OperatorExpr::number();
  CHECK(lhs == expected);

  const int n_max = 8;
  const Eigen::MatrixXcd a = dense_annihilate(n_max);
  const Eigen::MatrixXcd sp = dense_unit(1, 0, n_max) * a;
  const Eigen::MatrixXcd sm = dense_unit(0, 1, n_max) * a.adjoint();
  const Eigen::MatrixXcd oracle = sp * sm - sm * sp;
  CHECK(interior_diff(oracle, to_matrix(lhs, n_max, 1.0).matrix, n_max - 3) < 1e-12);
}

TEST_CASE("to_matrix basics") {
  const auto number = to_matrix(OperatorExpr::number(), 2, 1.0);
  CHECK_FALSE(number.truncated);
  for (int n = 0; n <= 2; ++n) {
    for (int k = 0; k < 2; ++k) {
      CHECK(number.matrix(2 * n + k, 2 * n + k) == std::complex<double>{double(n), 0});
    }
  }

  // (σ+⊗a)|g,1> = |e,0>
  const auto hop = to_matrix(OperatorExpr::sigma_p() * OperatorExpr::annihilate(), 3, 1.0);
  CHECK(std::abs(hop.matrix(1, 2) - 1.0) < 1e-15);

  // <3| a†³ |0> = sqrt(6)
  const auto creation3 = to_matrix(OperatorExpr::bosonic({3, 0}), 5, 1.0);
  CHECK(std::abs(creation3.matrix(6, 0) - std::sqrt(6.0)) < 1e-15);

  CHECK(to_matrix(OperatorExpr::create(), 2, 1.0).truncated);
  CHECK_FALSE(to_matrix(OperatorExpr::annihilate(), 2, 1.0).truncated);
}

TEST_CASE("equality is canonical-form equality") {
  using enum BosonOp;
  const std::vector<BosonOp> a_adag{annihilate, create};
  CHECK(equals(OperatorExpr::number() + OperatorExpr::identity(), normal_order(a_adag)));
  CHECK(equals(OperatorExpr::sigma_z(),
               OperatorExpr::proj_e() - OperatorExpr::proj_g()));
  CHECK_FALSE(equals(OperatorExpr::sigma_p() * OperatorExpr::annihilate(),
                     OperatorExpr::sigma_m() * OperatorExpr::create()));
}

TEST_CASE("product realization is a homomorphism on the interior") {
  std::mt19937 rng(20260809);
  const int n_max = 10;
  for (int trial = 0; trial < 30; ++trial) {
    const OperatorExpr a = random_expr(rng);
    const OperatorExpr b = random_expr(rng);
    const Eigen::MatrixXcd left = to_matrix(multiply(a, b), n_max, 0.7).matrix;
    const Eigen::MatrixXcd right =
        to_matrix(a, n_max, 0.7).matrix * to_matrix(b, n_max, 0.7).matrix;
    CHECK(interior_diff(left, right, n_max - 3) < 1e-12);
  }
}

TEST_CASE("commutator is bilinear and antisymmetric") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const OperatorExpr a = random_expr(rng);
    const OperatorExpr b = random_expr(rng);
    const OperatorExpr c = random_expr(rng);
    CHECK(equals(commutator(a, b), -commutator(b, a)));
    CHECK(equals(commutator(a, b + c), commutator(a, b) + commutator(a, c)));
  }
}

TEST_CASE("canonicalization is idempotent") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 20; ++trial) {
    const OperatorExpr e = random_expr(rng);
    // Rebuilding from the canonical terms reproduces the expression.
    OperatorExpr rebuilt;
    for (const auto& t : e.terms()) {
      rebuilt += OperatorExpr::single(t.coeff, t.lambda_power,
                                      AtomicBlock::unit(t.bra, t.ket), t.bosonic);
    }
    CHECK(rebuilt == e);
    CHECK(e.adjoint().adjoint() == e);
    for (const auto& t : e.terms()) CHECK_FALSE(t.coeff.is_zero());
  }
}

TEST_CASE("hermiticity detection") {
  const OperatorExpr h =
      OperatorExpr::sigma_p() * OperatorExpr::annihilate() +
      OperatorExpr::sigma_m() * OperatorExpr::create();
  CHECK(h.is_hermitian());
  CHECK_FALSE((OperatorExpr::sigma_p() * OperatorExpr::annihilate()).is_hermitian());
  CHECK(OperatorExpr::sigma_z().is_hermitian());
}
