#include "jlm/effective.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>

#include "jlm/errors.hpp"
#include "jlm/weights.hpp"

namespace jlm {

namespace {

/// Process-ordered detunings of a composite: the sequence of its all-left
/// diagram, which reads the operator product right to left.
std::vector<Rational> process_detunings(const DiagramGroup& group) {
  for (const Diagram& d : group.diagrams) {
    if (std::all_of(d.placements.begin(), d.placements.end(),
                    [](Placement p) { return p == Placement::left; })) {
      std::vector<Rational> out;
      out.reserve(d.sequence.size());
      for (const auto& t : d.sequence) out.push_back(t.detuning);
      return out;
    }
  }
  // Every group contains its canonical all-left realization.
  throw Error("diagram group without canonical ordering: " + to_string(group.composite));
}

Scalar coarse_coefficient(const DiagramGroup& group, int order) {
  const std::vector<Rational> deltas = process_detunings(group);
  switch (order) {
    case 0:
      return Scalar{1};  // W_0 = e^{-iδt}, resonant only when δ = 0
    case 1:
      return v1_coarse(deltas[0], deltas[1]).coefficient;
    case 2:
      return v2_coarse(deltas[0], deltas[1], deltas[2]).coefficient;
    default:
      throw Error("averaged weights are defined through order 2");
  }
}

}  // namespace

EffectiveCorrection build_correction(const ModelSpec& model, int order) {
  if (order < 0 || order > 2) {
    throw Error("build_correction supports orders 0..2, got " + std::to_string(order));
  }
  EffectiveCorrection corr;
  corr.order = order;
  OperatorExpr resonant_sum;
  for (const DiagramGroup& group : enumerate_diagrams(model, order)) {
    if (group.total_detuning != 0) {
      corr.discarded_terms.emplace_back(group.composite, group.total_detuning);
      continue;
    }
    try {
      resonant_sum += coarse_coefficient(group, order) * group.composite;
    } catch (const DegenerateDetunings& e) {
      throw DegenerateDetunings(std::string(e.what()) +
                                "; composite: " + to_string(group.composite) +
                                "; diagram:\n" + render_diagram(group.diagrams.front()));
    } catch (const ZeroDetuning& e) {
      throw ZeroDetuning(std::string(e.what()) +
                         "; composite: " + to_string(group.composite) + "; diagram:\n" +
                         render_diagram(group.diagrams.front()));
    }
  }
  // Peel off the multiple of the identity (atomic identity ⊗ photon identity).
  std::map<int, std::pair<Scalar, Scalar>> constant_diagonal;  // grade -> (c_gg, c_ee)
  for (const auto& t : resonant_sum.terms()) {
    if (t.bosonic != BosonicMonomial{0, 0} || t.bra != t.ket) continue;
    auto& [c_gg, c_ee] = constant_diagonal[t.lambda_power];
    (t.bra == 0 ? c_gg : c_ee) += t.coeff;
  }
  OperatorExpr identity;
  const Scalar half{Rational{1, 2}};
  for (const auto& [grade, diagonal] : constant_diagonal) {
    const Scalar c_identity = half * (diagonal.first + diagonal.second);
    if (!c_identity.is_zero()) {
      identity += c_identity * OperatorExpr::identity().shifted_lambda(grade);
    }
  }
  corr.identity_dropped = identity;
  corr.resonant_terms = resonant_sum - identity;
  return corr;
}

BareState parse_state_label(std::string_view label) {
  std::string cleaned;
  for (const char c : label) {
    if (c == '|' || c == '>' || c == ' ' || c == '\t') continue;
    cleaned += c;
  }
  // tolerate the UTF-8 right angle bracket
  if (const auto pos = cleaned.find("⟩"); pos != std::string::npos) {
    cleaned.erase(pos, std::string("⟩").size());
  }
  const auto comma = cleaned.find(',');
  if (comma == std::string::npos || comma + 1 >= cleaned.size()) {
    throw UnknownState("bad state label '" + std::string(label) + "', expected e.g. \"e,0\"");
  }
  const std::string atom = cleaned.substr(0, comma);
  const std::string photons = cleaned.substr(comma + 1);
  BareState s;
  if (atom == "g") {
    s.atom = 0;
  } else if (atom == "e") {
    s.atom = 1;
  } else {
    throw UnknownState("bad atomic label '" + atom + "' in '" + std::string(label) + "'");
  }
  try {
    size_t used = 0;
    s.photons = std::stoi(photons, &used);
    if (used != photons.size()) throw std::invalid_argument(photons);
  } catch (const std::exception&) {
    throw UnknownState("bad photon number '" + photons + "' in '" + std::string(label) + "'");
  }
  if (s.photons < 0) {
    throw UnknownState("negative photon number in '" + std::string(label) + "'");
  }
  return s;
}

std::string to_string(const BareState& s) {
  return std::string("|") + (s.atom == 0 ? "g" : "e") + "," + std::to_string(s.photons) + ">";
}

SubspaceMatrix::SubspaceMatrix(std::vector<BareState> basis)
    : basis_(std::move(basis)), entries_(basis_.size() * basis_.size()) {}

const std::vector<SubspaceEntryTerm>& SubspaceMatrix::entry(int row, int col) const {
  return entries_[row * basis_.size() + col];
}

void SubspaceMatrix::add_term(int row, int col, const SubspaceEntryTerm& term) {
  if (term.coeff.is_zero()) return;
  auto& cell = entries_[row * basis_.size() + col];
  for (auto& existing : cell) {
    if (existing.lambda_power == term.lambda_power &&
        existing.sqrt_factor == term.sqrt_factor) {
      existing.coeff += term.coeff;
      return;
    }
  }
  cell.push_back(term);
  std::sort(cell.begin(), cell.end(), [](const SubspaceEntryTerm& a, const SubspaceEntryTerm& b) {
    return std::tuple{a.lambda_power, a.sqrt_factor} < std::tuple{b.lambda_power, b.sqrt_factor};
  });
}

Eigen::MatrixXcd SubspaceMatrix::evaluate(double lambda) const {
  const int dim = static_cast<int>(basis_.size());
  Eigen::MatrixXcd mat = Eigen::MatrixXcd::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      std::complex<double> acc{0.0, 0.0};
      for (const auto& term : entry(i, j)) {
        acc += term.coeff.to_complex() * std::sqrt(static_cast<double>(term.sqrt_factor)) *
               std::pow(lambda, term.lambda_power);
      }
      mat(i, j) = acc;
    }
  }
  return mat;
}

bool SubspaceMatrix::is_hermitian() const {
  const int dim = static_cast<int>(basis_.size());
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      const auto& a = entry(i, j);
      const auto& b = entry(j, i);
      if (a.size() != b.size()) return false;
      for (size_t k = 0; k < a.size(); ++k) {
        if (a[k].lambda_power != b[k].lambda_power ||
            a[k].sqrt_factor != b[k].sqrt_factor || a[k].coeff != b[k].coeff.conj()) {
          return false;
        }
      }
    }
  }
  return true;
}

namespace {

long long falling_factorial(int n, int k) {
  long long acc = 1;
  for (int i = 0; i < k; ++i) acc *= n - i;
  return acc;
}

/// K = s²·r with r squarefree; returns (s, r).
std::pair<long long, long long> squarefree_split(long long k) {
  long long square = 1, rest = 1;
  for (long long p = 2; p * p <= k; ++p) {
    int exponent = 0;
    while (k % p == 0) {
      k /= p;
      ++exponent;
    }
    for (int i = 0; i < exponent / 2; ++i) square *= p;
    if (exponent % 2 != 0) rest *= p;
  }
  rest *= k;  // leftover prime
  return {square, rest};
}

void project_expr(SubspaceMatrix& out, const OperatorExpr& expr,
                  std::span<const BareState> basis) {
  for (const auto& term : expr.terms()) {
    const int m = term.bosonic.create_power;
    const int n = term.bosonic.annihilate_power;
    for (size_t j = 0; j < basis.size(); ++j) {
      if (basis[j].atom != term.ket) continue;
      const int na = basis[j].photons;
      if (na < n) continue;
      const int nb = na - n + m;
      for (size_t i = 0; i < basis.size(); ++i) {
        if (basis[i].atom != term.bra || basis[i].photons != nb) continue;
        const long long k = falling_factorial(na, n) * falling_factorial(nb, m);
        const auto [square, rest] = squarefree_split(k);
        out.add_term(static_cast<int>(i), static_cast<int>(j),
                     {term.coeff * Scalar{Rational{square}}, rest, term.lambda_power});
      }
    }
  }
}

}  // namespace

SubspaceMatrix project_subspace(std::span<const EffectiveCorrection> corrections,
                                const ModelSpec& model, std::span<const BareState> basis) {
  SubspaceMatrix out{std::vector<BareState>(basis.begin(), basis.end())};
  project_expr(out, free_hamiltonian(model), basis);
  for (const auto& corr : corrections) {
    project_expr(out, corr.resonant_full(), basis);
  }
  return out;
}

double ResonanceCondition::evaluate(double lambda) const {
  return to_double(base) + to_double(lambda2_coeff) * lambda * lambda;
}

Rational ResonanceCondition::evaluate_exact(double lambda) const {
  const Rational lr{lambda};  // exact binary rational of the double
  return base + lambda2_coeff * lr * lr;
}

ResonanceCondition resonance_condition(const ModelSpec& model, const BareState& a,
                                       const BareState& b) {
  const int dn = b.photons - a.photons;
  const Rational ds{(b.atom == 1 ? 1 : -1) - (a.atom == 1 ? 1 : -1)};
  if (dn == 0) {
    throw NoSolution("bare energies of " + to_string(a) + " and " + to_string(b) +
                     " never cross as ω_c varies");
  }
  // Bare crossing: (n_b - n_a) ω_c + (s_b - s_a) ω_e/2 = 0.
  const Rational bare = -ds * model.omega_e / (2 * dn);
  if (bare <= 0) {
    throw NoSolution("bare crossing sits at non-positive ω_c for " + to_string(a) + ", " +
                     to_string(b));
  }
  ModelSpec at_bare = model;
  at_bare.omega_c = bare;

  std::vector<EffectiveCorrection> corrections;
  corrections.push_back(build_correction(at_bare, 1));
  corrections.push_back(build_correction(at_bare, 2));
  const std::vector<BareState> pair{a, b};
  const SubspaceMatrix projected = project_subspace(corrections, at_bare, pair);
  if (projected.entry(0, 1).empty()) {
    throw NoSolution("no computed correction connects " + to_string(a) + " and " +
                     to_string(b));
  }

  // First-order diagonal shifts; rational by construction (diagonal bosonic
  // elements are perfect squares).
  const auto lambda2_shift = [&](int index) {
    Rational shift{0};
    for (const auto& term : projected.entry(index, index)) {
      if (term.lambda_power == 2 && term.sqrt_factor == 1) shift += term.coeff.re;
    }
    return shift;
  };
  const Rational shift_a = lambda2_shift(0);
  const Rational shift_b = lambda2_shift(1);

  ResonanceCondition out;
  out.base = bare;
  out.lambda2_coeff = (shift_a - shift_b) / dn;
  return out;
}

}  // namespace jlm
