#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <complex>
#include <set>

#include "jlm/diagrams.hpp"
#include "jlm/errors.hpp"

using namespace jlm;

namespace {

ModelSpec rabi_third() { return {Rational{1}, Rational{1, 3}, 0.03, false}; }

const JLMTransition& find_transition(const std::vector<JLMTransition>& ts, int atom_to,
                                     bool creates) {
  for (const auto& t : ts) {
    if (t.atom_to == atom_to && t.creates_photon == creates) return t;
  }
  FAIL("transition not found");
  return ts.front();
}

}  // namespace

TEST_CASE("zeroth-order extraction for the Rabi model") {
  const auto transitions = extract_zeroth_order(rabi_third());
  REQUIRE(transitions.size() == 4);

  const auto& sp_a = find_transition(transitions, 1, false);  // σ+⊗a
  CHECK(sp_a.detuning == Rational{1, 3} - 1);
  CHECK(sp_a.detuning == Rational{-2, 3});

  const auto& sm_a = find_transition(transitions, 0, false);  // σ-⊗a
  CHECK(sm_a.detuning == Rational{1} + Rational{1, 3});

  const auto& sp_ad = find_transition(transitions, 1, true);  // σ+⊗a†
  CHECK(sp_ad.detuning == Rational{-1} - Rational{1, 3});

  const auto& sm_ad = find_transition(transitions, 0, true);  // σ-⊗a†
  CHECK(sm_ad.detuning == Rational{1} - Rational{1, 3});

  // Each op is an eigenoperator with grade λ^1.
  for (const auto& t : transitions) {
    CHECK(detuning_of(t.op, rabi_third()) == t.detuning);
    REQUIRE(t.op.terms().size() == 1);
    CHECK(t.op.terms().front().lambda_power == 1);
  }
}

TEST_CASE("zeroth-order extraction under the RWA at resonance") {
  const ModelSpec jc{Rational{1}, Rational{1}, 0.05, true};
  const auto transitions = extract_zeroth_order(jc);
  REQUIRE(transitions.size() == 2);
  for (const auto& t : transitions) CHECK(t.detuning == 0);
}

TEST_CASE("detuning_of") {
  const ModelSpec model = rabi_third();

  // σ+⊗a³: detuning 3ω_c − ω_e = 0 at the three-photon resonance
  const OperatorExpr three_photon =
      OperatorExpr::sigma_p() * OperatorExpr::bosonic({0, 3});
  CHECK(detuning_of(three_photon, model) == 0);

  CHECK(detuning_of(OperatorExpr::proj_g() * OperatorExpr::number(), model) == 0);

  const OperatorExpr mixed = OperatorExpr::sigma_p() * OperatorExpr::annihilate() +
                             OperatorExpr::sigma_m() * OperatorExpr::create();
  CHECK_THROWS_AS(detuning_of(mixed, model), NotEigenoperator);
  CHECK_THROWS_AS(detuning_of(OperatorExpr::zero(), model), NotEigenoperator);
}

TEST_CASE("order-0 enumeration is the transition set itself") {
  const auto groups = enumerate_diagrams(rabi_third(), 0);
  REQUIRE(groups.size() == 4);
  for (const auto& g : groups) {
    REQUIRE(g.diagrams.size() == 1);
    CHECK(g.composite == g.diagrams.front().sequence.front().op);
    CHECK(g.total_detuning == g.diagrams.front().sequence.front().detuning);
  }
}

TEST_CASE("order-1 enumeration against the exhaustive pairing oracle") {
  // Oracle: multiply the four atomic 2x2 matrices directly; a pair survives
  // iff the product is non-zero. Photon parts never vanish, so the distinct
  // ordered pairs with non-zero atomic product count the composites.
  const std::array<std::array<std::complex<double>, 4>, 4> atoms{{
      {0, 0, 1, 0},  // σ+ (row-major |bra><ket| entries: gg, ge, eg, ee)
      {0, 0, 1, 0},  // σ+ (paired with a†)
      {0, 1, 0, 0},  // σ-
      {0, 1, 0, 0},  // σ- (paired with a)
  }};
  int surviving_pairs = 0;
  for (int first = 0; first < 4; ++first) {
    for (int second = 0; second < 4; ++second) {
      std::array<std::complex<double>, 4> prod{};
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
          for (int k = 0; k < 2; ++k) {
            prod[2 * i + j] += atoms[first][2 * i + k] * atoms[second][2 * k + j];
          }
        }
      }
      bool nonzero = false;
      for (const auto& v : prod) nonzero = nonzero || std::abs(v) > 0;
      if (nonzero) ++surviving_pairs;
    }
  }
  REQUIRE(surviving_pairs == 8);

  const auto groups = enumerate_diagrams(rabi_third(), 1);
  CHECK(groups.size() == static_cast<size_t>(surviving_pairs));
  size_t diagrams = 0;
  for (const auto& g : groups) diagrams += g.diagrams.size();
  CHECK(diagrams == 16);  // two orderings per composite

  // The Stark and Bloch-Siegert composites and their |e><e| counterparts.
  const OperatorExpr stark =
      (OperatorExpr::proj_g() * OperatorExpr::number()).shifted_lambda(2);
  const OperatorExpr bs =
      (OperatorExpr::proj_g() * (OperatorExpr::number() + OperatorExpr::identity()))
          .shifted_lambda(2);
  const OperatorExpr two_photon =
      (OperatorExpr::proj_g() * OperatorExpr::bosonic({0, 2})).shifted_lambda(2);
  bool saw_stark = false, saw_bs = false, saw_two_photon = false, saw_e_loop = false;
  for (const auto& g : groups) {
    if (g.composite == stark) saw_stark = true;
    if (g.composite == bs) saw_bs = true;
    if (g.composite == two_photon) saw_two_photon = true;
    if (g.composite ==
        (OperatorExpr::proj_e() * OperatorExpr::number()).shifted_lambda(2)) {
      saw_e_loop = true;
    }
  }
  CHECK(saw_stark);
  CHECK(saw_bs);
  CHECK(saw_two_photon);
  CHECK(saw_e_loop);
}

TEST_CASE("diagram invariants through order 2") {
  const ModelSpec model = rabi_third();
  for (int order = 0; order <= 2; ++order) {
    const auto groups = enumerate_diagrams(model, order);
    for (const auto& g : groups) {
      // Composite detuning equals the shared cumulative Δ_n.
      CHECK(detuning_of(g.composite, model) == g.total_detuning);
      // λ grading is order+1 on every term.
      for (const auto& t : g.composite.terms()) CHECK(t.lambda_power == order + 1);
      for (const auto& d : g.diagrams) {
        CHECK(d.cumulative.back() == g.total_detuning);
        CHECK(d.n_left == static_cast<int>(std::count(d.placements.begin(),
                                                      d.placements.end(),
                                                      Placement::left)));
        // Cumulative detunings are running sums of the sequence.
        Rational running{0};
        for (size_t i = 0; i < d.sequence.size(); ++i) {
          running += d.sequence[i].detuning;
          CHECK(d.cumulative[i] == running);
        }
        // Regularizers carry pairwise distinct θ indices.
        const auto reg = d.regularized_detunings();
        std::set<int> thetas;
        for (const auto& r : reg) thetas.insert(r.theta_index);
        CHECK(thetas.size() == reg.size());
      }
      // Hermitian-conjugate closure of the emitted composites.
      const OperatorExpr conj = g.composite.adjoint();
      bool found = false;
      for (const auto& other : groups) found = found || (other.composite == conj);
      CHECK(found);
    }
  }
}

TEST_CASE("order-2 counts and the resonant three-photon composite") {
  const auto groups = enumerate_diagrams(rabi_third(), 2);
  CHECK(groups.size() == 16);  // 2 atomic alternations × 2³ photon choices
  size_t diagrams = 0;
  int resonant = 0;
  for (const auto& g : groups) {
    diagrams += g.diagrams.size();
    CHECK(g.diagrams.size() == 4);  // 2^order orderings per composite
    if (g.total_detuning == 0) ++resonant;
  }
  CHECK(diagrams == 64);
  CHECK(resonant == 2);  // σ+⊗a³ and its conjugate at ω_e = 3ω_c
}

TEST_CASE("enumeration is deterministic") {
  const auto a = enumerate_diagrams(rabi_third(), 2);
  const auto b = enumerate_diagrams(rabi_third(), 2);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].composite == b[i].composite);
    REQUIRE(a[i].diagrams.size() == b[i].diagrams.size());
    for (size_t j = 0; j < a[i].diagrams.size(); ++j) {
      CHECK(render_diagram(a[i].diagrams[j]) == render_diagram(b[i].diagrams[j]));
    }
  }
}

TEST_CASE("rendering") {
  const ModelSpec model = rabi_third();
  const auto zeroth = enumerate_diagrams(model, 0);
  bool saw_absorption = false;
  for (const auto& g : zeroth) {
    const std::string text = render_diagram(g.diagrams.front());
    if (text == "g →(absorb, δ=ω_c−ω_e)→ e") saw_absorption = true;
  }
  CHECK(saw_absorption);

  // Stark diagram: two steps ending at Δ_1 = 0.
  const OperatorExpr stark =
      (OperatorExpr::proj_g() * OperatorExpr::number()).shifted_lambda(2);
  for (const auto& g : enumerate_diagrams(model, 1)) {
    if (!(g.composite == stark)) continue;
    REQUIRE(g.diagrams.size() == 2);
    for (const auto& d : g.diagrams) {
      const std::string text = render_diagram(d);
      CHECK(std::count(text.begin(), text.end(), '\n') == 1);
      CHECK(text.find("[Δ_1 = 0]") != std::string::npos);
    }
  }

  // Three-photon diagram: three steps ending at Δ_2 = 3ω_c − ω_e.
  const OperatorExpr three_photon =
      (OperatorExpr::sigma_p() * OperatorExpr::bosonic({0, 3})).shifted_lambda(3);
  ModelSpec detuned = model;
  detuned.omega_c = Rational{1, 5};
  for (const auto& g : enumerate_diagrams(detuned, 2)) {
    if (!(g.composite == three_photon)) continue;
    CHECK(g.total_detuning == Rational{3, 5} - 1);
    const std::string text = render_diagram(g.diagrams.front());
    CHECK(std::count(text.begin(), text.end(), '\n') == 2);
    CHECK(text.find("[Δ_2 = -2/5]") != std::string::npos);
  }
}
