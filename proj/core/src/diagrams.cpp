#include "jlm/diagrams.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "jlm/errors.hpp"

namespace jlm {

namespace {

std::string detuning_symbol_for(int atom_to, bool creates_photon) {
  // Fixed symbolic detunings of the four elementary transitions. U+2212
  // minus signs, matching the rendered diagram format.
  if (atom_to == 1 && !creates_photon) return "ω_c−ω_e";   // σ+ a
  if (atom_to == 1 && creates_photon) return "−ω_e−ω_c";   // σ+ a†
  if (atom_to == 0 && creates_photon) return "ω_e−ω_c";    // σ- a†
  return "ω_e+ω_c";                                        // σ- a
}

int transition_rank(const JLMTransition& t) {
  // σ+a, σ+a†, σ-a†, σ-a
  if (t.atom_to == 1) return t.creates_photon ? 1 : 0;
  return t.creates_photon ? 2 : 3;
}

}  // namespace

std::vector<JLMTransition> extract_zeroth_order(const ModelSpec& model) {
  std::vector<JLMTransition> out;
  const OperatorExpr h_int = interaction_hamiltonian(model);
  for (const auto& term : h_int.terms()) {
    JLMTransition t;
    t.op = Scalar{term.coeff} *
           OperatorExpr::single(Scalar{1}, term.lambda_power,
                                AtomicBlock::unit(term.bra, term.ket), term.bosonic);
    t.atom_from = term.ket;
    t.atom_to = term.bra;
    t.creates_photon = term.bosonic.create_power > 0;
    t.detuning = detuning_of(t.op, model);
    t.detuning_symbol = detuning_symbol_for(t.atom_to, t.creates_photon);
    out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end(), [](const JLMTransition& a, const JLMTransition& b) {
    return transition_rank(a) < transition_rank(b);
  });
  return out;
}

Rational detuning_of(const OperatorExpr& op, const ModelSpec& model) {
  if (op.is_zero()) throw NotEigenoperator("zero operator has no detuning");
  const OperatorExpr c = commutator(op, free_hamiltonian(model));
  if (c.is_zero()) return 0;
  const auto ratio = scalar_ratio(c, op);
  if (!ratio || !ratio->is_real()) {
    throw NotEigenoperator("commutator with H_free is not a scalar multiple: " +
                           to_string(op));
  }
  return ratio->re;
}

std::vector<RegularizedDetuning> Diagram::regularized_detunings() const {
  std::vector<RegularizedDetuning> out;
  out.reserve(sequence.size());
  for (size_t i = 0; i < sequence.size(); ++i) {
    out.push_back({sequence[i].detuning, static_cast<int>(i)});
  }
  return out;
}

namespace {

struct ExprCompare {
  bool operator()(const OperatorExpr& a, const OperatorExpr& b) const {
    return OperatorExpr::compare(a, b) == std::strong_ordering::less;
  }
};

void enumerate_from(const std::vector<JLMTransition>& transitions, int order,
                    Diagram& partial, std::map<OperatorExpr, std::vector<Diagram>,
                    ExprCompare>& groups) {
  if (static_cast<int>(partial.placements.size()) == order) {
    Diagram d = partial;
    d.n_left = static_cast<int>(
        std::count(d.placements.begin(), d.placements.end(), Placement::left));
    groups[d.composite].push_back(std::move(d));
    return;
  }
  for (const auto& t : transitions) {
    for (const Placement p : {Placement::left, Placement::right}) {
      OperatorExpr next = p == Placement::left ? multiply(t.op, partial.composite)
                                               : multiply(partial.composite, t.op);
      if (next.is_zero()) continue;  // vanishing products contribute nothing
      partial.sequence.push_back(t);
      partial.placements.push_back(p);
      partial.cumulative.push_back(partial.cumulative.back() + t.detuning);
      std::swap(partial.composite, next);
      enumerate_from(transitions, order, partial, groups);
      std::swap(partial.composite, next);
      partial.sequence.pop_back();
      partial.placements.pop_back();
      partial.cumulative.pop_back();
    }
  }
}

std::vector<int> diagram_sort_key(const Diagram& d) {
  std::vector<int> key;
  key.reserve(2 * d.sequence.size());
  for (const auto& t : d.sequence) key.push_back(transition_rank(t));
  for (const Placement p : d.placements) key.push_back(p == Placement::left ? 0 : 1);
  return key;
}

}  // namespace

std::vector<DiagramGroup> enumerate_diagrams(const ModelSpec& model, int order) {
  const std::vector<JLMTransition> transitions = extract_zeroth_order(model);
  std::map<OperatorExpr, std::vector<Diagram>, ExprCompare> groups;
  for (const auto& t : transitions) {
    Diagram partial;
    partial.order = order;
    partial.sequence = {t};
    partial.cumulative = {t.detuning};
    partial.composite = t.op;
    enumerate_from(transitions, order, partial, groups);
  }
  std::vector<DiagramGroup> out;
  out.reserve(groups.size());
  for (auto& [composite, diagrams] : groups) {
    std::sort(diagrams.begin(), diagrams.end(), [](const Diagram& a, const Diagram& b) {
      return diagram_sort_key(a) < diagram_sort_key(b);
    });
    DiagramGroup g;
    g.composite = composite;
    g.total_detuning = diagrams.front().cumulative.back();
    g.diagrams = std::move(diagrams);
    out.push_back(std::move(g));
  }
  return out;
}

std::string render_diagram(const Diagram& d) {
  std::string out;
  for (size_t i = 0; i < d.sequence.size(); ++i) {
    const JLMTransition& t = d.sequence[i];
    std::string line;
    line += (t.atom_from == 0) ? "g" : "e";
    line += " →(";
    line += t.creates_photon ? "emit" : "absorb";
    line += ", δ=" + t.detuning_symbol;
    if (i > 0) {
      line += (d.placements[i - 1] == Placement::left) ? ", LEFT" : ", RIGHT";
    }
    line += ")→ ";
    line += (t.atom_to == 0) ? "g" : "e";
    if (d.order > 0) {
      line += "   [Δ_" + std::to_string(i) + " = " + to_string(d.cumulative[i]) + "]";
    }
    out += line;
    if (i + 1 < d.sequence.size()) out += "\n";
  }
  return out;
}

}  // namespace jlm
