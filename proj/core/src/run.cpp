#include "jlm/run.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "jlm/errors.hpp"
#include "jlm/weights.hpp"

namespace jlm {

namespace {

using json = nlohmann::ordered_json;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_coupling(std::string_view value) {
  // λ accepts decimals or rationals; frequencies go through
  // rational_from_string and stay exact.
  try {
    return to_double(rational_from_string(value));
  } catch (const std::invalid_argument&) {
  }
  try {
    size_t used = 0;
    const std::string text{value};
    const double parsed = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return parsed;
  } catch (const std::exception&) {
    throw ConfigError("bad value for lambda: '" + std::string(value) + "'");
  }
}

bool parse_bool(std::string_view value, const std::string& key) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  throw ConfigError("bad boolean for " + key + ": '" + std::string(value) + "'");
}

int parse_int(std::string_view value, const std::string& key) {
  try {
    size_t used = 0;
    const std::string text{value};
    const int parsed = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return parsed;
  } catch (const std::exception&) {
    throw ConfigError("bad integer for " + key + ": '" + std::string(value) + "'");
  }
}

}  // namespace

std::string format_number(double value) {
  if (value == 0.0) value = 0.0;  // normalize -0
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

namespace {

double rounded(double value) { return std::stod(format_number(value)); }

}  // namespace

RunConfig parse_config_text(const std::string& text) {
  RunConfig config;
  bool saw_omega_e = false, saw_omega_c = false, saw_lambda = false;
  std::istringstream stream(text);
  std::string line;
  int line_number = 0;
  while (std::getline(stream, line)) {
    ++line_number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string_view entry = trim(line);
    if (entry.empty()) continue;
    const auto eq = entry.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_number) + ": expected key=value");
    }
    const std::string key{trim(entry.substr(0, eq))};
    const std::string_view value = trim(entry.substr(eq + 1));
    try {
      if (key == "omega_e") {
        config.model.omega_e = rational_from_string(value);
        saw_omega_e = true;
      } else if (key == "omega_c") {
        config.model.omega_c = rational_from_string(value);
        saw_omega_c = true;
      } else if (key == "lambda") {
        config.model.lambda = parse_coupling(value);
        saw_lambda = true;
      } else if (key == "rwa") {
        config.model.rwa = parse_bool(value, key);
      } else if (key == "order") {
        config.order = parse_int(value, key);
      } else if (key == "n_max") {
        config.numerics.n_max = parse_int(value, key);
      } else if (key == "leakage_tolerance") {
        config.numerics.leakage_tolerance = std::stod(std::string(value));
      } else if (key == "format") {
        config.format = std::string(value);
      } else if (key == "out") {
        config.out_path = std::string(value);
      } else {
        throw ConfigError("unknown key '" + key + "'");
      }
    } catch (const std::invalid_argument& e) {
      throw ConfigError("line " + std::to_string(line_number) + ", key " + key + ": " +
                        e.what());
    }
  }
  if (!saw_omega_e || !saw_omega_c || !saw_lambda) {
    throw ConfigError("config must set omega_e, omega_c, and lambda");
  }
  validate(config);
  return config;
}

RunConfig load_config(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return parse_config_text(buffer.str());
}

void validate(const RunConfig& config) {
  config.model.validate();
  if (config.order < 0 || config.order > 2) {
    throw ConfigError("order must be in 0..2, got " + std::to_string(config.order));
  }
  if (config.numerics.n_max < 1) throw ConfigError("n_max must be >= 1");
  if (config.numerics.leakage_tolerance <= 0) {
    throw ConfigError("leakage_tolerance must be positive");
  }
  if (config.format != "json" && config.format != "csv" && config.format != "text") {
    throw ConfigError("format must be one of json, csv, text");
  }
}

namespace {

std::string display_label(const std::string& label) {
  if (label == "sz") return "σz";
  if (label == "s+") return "σ+";
  if (label == "s-") return "σ-";
  return label;  // "I"
}

std::string unit_label(int bra, int ket) {
  if (bra == 0 && ket == 0) return "|g><g|";
  if (bra == 1 && ket == 1) return "|e><e|";
  if (bra == 1 && ket == 0) return "σ+";
  return "σ-";
}

Scalar scalar_divide(const Scalar& a, const Scalar& b) {
  const Rational norm = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / norm, (a.im * b.re - a.re * b.im) / norm};
}

json term_object(const std::string& label, int lambda_power, const Scalar& coeff,
                 const std::vector<std::pair<BosonicMonomial, Scalar>>& bosonic) {
  json term;
  term["coeff_num"] = to_string(numerator(coeff.re));
  term["coeff_den"] = to_string(denominator(coeff.re));
  term["coeff_im_num"] = to_string(numerator(coeff.im));
  term["coeff_im_den"] = to_string(denominator(coeff.im));
  term["lambda_power"] = lambda_power;
  term["omega_power"] = 1 - lambda_power;
  term["atomic_label"] = label;
  json monomials = json::array();
  for (const auto& [mono, amp] : bosonic) {
    const Scalar weight = scalar_divide(amp, coeff);
    json entry;
    entry["m"] = mono.create_power;
    entry["n"] = mono.annihilate_power;
    if (weight.is_real()) {
      entry["weight"] = to_string(weight.re);
    } else {
      entry["weight"] = to_string(weight);
    }
    monomials.push_back(std::move(entry));
  }
  term["bosonic"] = std::move(monomials);
  term["sqrt_factor"] = 1;
  return term;
}

/// One JSON object per (atomic label, λ grade), coefficient taken from the
/// highest monomial so Eq.-style groupings like σz(n̂ + 1/2) read directly.
json pauli_terms_json(const OperatorExpr& expr) {
  json terms = json::array();
  for (const PauliTerm& pt : to_pauli_basis(expr)) {
    const Scalar& lead = pt.bosonic.back().second;
    terms.push_back(term_object(display_label(pt.label), pt.lambda_power, lead, pt.bosonic));
  }
  return terms;
}

json raw_terms_json(const OperatorExpr& expr) {
  json terms = json::array();
  for (const OperatorTerm& t : expr.terms()) {
    terms.push_back(term_object(unit_label(t.bra, t.ket), t.lambda_power, t.coeff,
                                {{t.bosonic, t.coeff}}));
  }
  return terms;
}

json model_json(const ModelSpec& model) {
  json m;
  m["omega_e"] = to_string(model.omega_e);
  m["omega_c"] = to_string(model.omega_c);
  m["lambda"] = rounded(model.lambda);
  m["rwa"] = model.rwa;
  return m;
}

std::string pauli_pretty(const OperatorExpr& expr) {
  if (expr.is_zero()) return "0";
  std::string out;
  for (const PauliTerm& pt : to_pauli_basis(expr)) {
    if (!out.empty()) out += "\n";
    const Scalar& lead = pt.bosonic.back().second;
    out += "  (" + to_string(lead) + ")";
    if (pt.lambda_power > 0) {
      out += " λ^" + std::to_string(pt.lambda_power);
    }
    out += " " + display_label(pt.label) + " ⊗ (";
    for (size_t i = 0; i < pt.bosonic.size(); ++i) {
      if (i > 0) out += " + ";
      const Scalar weight = scalar_divide(pt.bosonic[i].second, lead);
      const auto& mono = pt.bosonic[i].first;
      std::string mono_str;
      if (mono.create_power == 0 && mono.annihilate_power == 0) {
        mono_str = "1";
      } else {
        if (mono.create_power > 0) {
          mono_str += "a†";
          if (mono.create_power > 1) mono_str += "^" + std::to_string(mono.create_power);
        }
        if (mono.annihilate_power > 0) {
          mono_str += "a";
          if (mono.annihilate_power > 1) {
            mono_str += "^" + std::to_string(mono.annihilate_power);
          }
        }
      }
      if (weight == Scalar{1}) {
        out += mono_str;
      } else {
        out += "(" + to_string(weight) + ")·" + mono_str;
      }
    }
    out += ")";
  }
  return out;
}

}  // namespace

std::string correction_to_json(const ModelSpec& model, const EffectiveCorrection& corr) {
  json doc;
  doc["model"] = model_json(model);
  doc["order"] = corr.order;
  doc["resonant_terms"] = pauli_terms_json(corr.resonant_terms);
  json discarded = json::array();
  for (const auto& [expr, detuning] : corr.discarded_terms) {
    json entry;
    entry["detuning"] = to_string(detuning);
    entry["terms"] = raw_terms_json(expr);
    discarded.push_back(std::move(entry));
  }
  doc["discarded_terms"] = std::move(discarded);
  doc["audit"]["identity_dropped"] = pauli_terms_json(corr.identity_dropped);
  return doc.dump(2) + "\n";
}

namespace {

OperatorExpr label_to_expr(const std::string& label) {
  if (label == "I") return OperatorExpr::identity();
  if (label == "σz") return OperatorExpr::sigma_z();
  if (label == "σ+") return OperatorExpr::sigma_p();
  if (label == "σ-") return OperatorExpr::sigma_m();
  if (label == "|g><g|") return OperatorExpr::proj_g();
  if (label == "|e><e|") return OperatorExpr::proj_e();
  throw ConfigError("unknown atomic label '" + label + "'");
}

Scalar coeff_from_term(const json& term) {
  const Rational re{rational_from_string(term.at("coeff_num").get<std::string>()) /
                    rational_from_string(term.at("coeff_den").get<std::string>())};
  const Rational im{rational_from_string(term.at("coeff_im_num").get<std::string>()) /
                    rational_from_string(term.at("coeff_im_den").get<std::string>())};
  return {re, im};
}

}  // namespace

namespace {

OperatorExpr expr_from_terms(const json& terms) {
  OperatorExpr out;
  for (const json& term : terms) {
    const Scalar coeff = coeff_from_term(term);
    const OperatorExpr atomic = label_to_expr(term.at("atomic_label").get<std::string>());
    OperatorExpr bosonic;
    for (const json& entry : term.at("bosonic")) {
      const Rational weight = rational_from_string(entry.at("weight").get<std::string>());
      bosonic += Scalar{weight} *
                 OperatorExpr::bosonic({entry.at("m").get<int>(), entry.at("n").get<int>()});
    }
    out += coeff * multiply(atomic, bosonic).shifted_lambda(term.at("lambda_power").get<int>());
  }
  return out;
}

}  // namespace

OperatorExpr expr_from_json(const std::string& json_text, const std::string& key) {
  const json doc = json::parse(json_text);
  if (key == "identity_dropped") return expr_from_terms(doc.at("audit").at("identity_dropped"));
  return expr_from_terms(doc.at(key));
}

OperatorExpr expr_from_json_terms(const std::string& terms_array_text) {
  return expr_from_terms(json::parse(terms_array_text));
}

int cmd_expand(const RunConfig& config, std::ostream& out, std::ostream& diag) {
  EffectiveCorrection corr;
  try {
    corr = build_correction(config.model, config.order);
  } catch (const DegenerateDetunings& e) {
    diag << "degenerate detunings: " << e.what() << "\n";
    return 2;
  } catch (const ZeroDetuning& e) {
    diag << "zero detuning: " << e.what() << "\n";
    return 2;
  }
  // The expansion is emitted regardless, but the dispersive assumption needs
  // every one-photon detuning large against the coupling.
  for (const auto& transition : extract_zeroth_order(config.model)) {
    if (std::abs(to_double(transition.detuning)) < config.model.lambda) {
      diag << "warning: |δ| = " << format_number(std::abs(to_double(transition.detuning)))
           << " below lambda = " << format_number(config.model.lambda)
           << " for a one-photon transition; the dispersive assumption is strained\n";
    }
  }
  if (config.format == "json") {
    out << correction_to_json(config.model, corr);
  } else if (config.format == "csv") {
    out << "section,atomic,lambda_power,omega_power,m,n,weight,coeff,detuning\n";
    const auto pauli_rows = [&out](const char* section, const OperatorExpr& expr,
                                   const Rational& detuning) {
      for (const PauliTerm& pt : to_pauli_basis(expr)) {
        const Scalar& lead = pt.bosonic.back().second;
        for (const auto& [mono, amp] : pt.bosonic) {
          out << section << "," << display_label(pt.label) << "," << pt.lambda_power << ","
              << 1 - pt.lambda_power << "," << mono.create_power << ","
              << mono.annihilate_power << "," << to_string(scalar_divide(amp, lead)) << ","
              << to_string(lead) << "," << to_string(detuning) << "\n";
        }
      }
    };
    pauli_rows("resonant", corr.resonant_terms, Rational{0});
    // discarded composites keep their raw matrix-unit form, as in JSON
    for (const auto& [expr, detuning] : corr.discarded_terms) {
      for (const OperatorTerm& t : expr.terms()) {
        out << "discarded," << unit_label(t.bra, t.ket) << "," << t.lambda_power << ","
            << 1 - t.lambda_power << "," << t.bosonic.create_power << ","
            << t.bosonic.annihilate_power << ",1," << to_string(t.coeff) << ","
            << to_string(detuning) << "\n";
      }
    }
    pauli_rows("audit_identity", corr.identity_dropped, Rational{0});
  } else {
    out << "ΔH^(" << corr.order << ") for omega_e = " << to_string(config.model.omega_e)
        << ", omega_c = " << to_string(config.model.omega_c)
        << ", lambda = " << format_number(config.model.lambda)
        << (config.model.rwa ? " (Jaynes-Cummings)" : " (Rabi)") << "\n";
    out << "resonant terms (coefficient × λ^p × operator):\n"
        << pauli_pretty(corr.resonant_terms) << "\n";
    out << "audit — identity dropped:\n" << pauli_pretty(corr.identity_dropped) << "\n";
    out << "discarded composites (non-zero detuning): " << corr.discarded_terms.size()
        << "\n";
    for (const auto& [expr, detuning] : corr.discarded_terms) {
      out << "  " << to_string(expr) << "   [Δ = " << to_string(detuning) << "]\n";
    }
  }
  return 0;
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& diag) {
  const BareState excited{1, 0};
  const BareState target{0, 3};
  ResonanceCondition rc;
  try {
    rc = resonance_condition(config.model, excited, target);
  } catch (const NoSolution& e) {
    diag << "no resonance condition: " << e.what() << "\n";
    return 3;
  }
  const Rational omega_c_star = rc.evaluate_exact(config.model.lambda);

  // Prediction from the effective-Hamiltonian side, evaluated at the bare
  // three-photon resonance where the σ+a³ composite is exactly resonant.
  ModelSpec at_bare = config.model;
  at_bare.omega_c = rc.base;
  std::vector<EffectiveCorrection> corrections;
  corrections.push_back(build_correction(at_bare, 1));
  corrections.push_back(build_correction(at_bare, 2));
  const std::vector<BareState> pair{excited, target};
  const SubspaceMatrix projected = project_subspace(corrections, at_bare, pair);
  const double coupling = std::abs(projected.evaluate(config.model.lambda)(0, 1));
  const double predicted = 2.0 * coupling;

  ModelSpec star = config.model;
  star.omega_c = omega_c_star;

  const int samples = 2048;
  const double window = predicted > 0 ? 16.0 * 2.0 * std::numbers::pi / predicted
                                      : 1000.0 / to_double(config.model.omega_e);
  std::vector<double> times(samples);
  for (int i = 0; i < samples; ++i) {
    times[i] = window * static_cast<double>(i) / static_cast<double>(samples - 1);
  }

  Eigen::VectorXcd psi0 = Eigen::VectorXcd::Zero(2 * (config.numerics.n_max + 1));
  psi0(state_index(1, 0)) = 1.0;

  Trajectory traj;
  try {
    traj = evolve(build_full_hamiltonian(star, config.numerics), psi0, times,
                  config.numerics);
  } catch (const LeakageExceeded& e) {
    diag << "leakage: " << e.what() << "\n";
    return 3;
  }

  std::vector<double> signal(samples);
  for (int i = 0; i < samples; ++i) {
    signal[i] = traj.populations(i, state_index(0, 3));
  }
  const double contrast = *std::max_element(signal.begin(), signal.end()) -
                          *std::min_element(signal.begin(), signal.end());

  double measured = 0.0;
  bool no_peak = false;
  try {
    measured = extract_frequency(times, signal);
  } catch (const NoPeak&) {
    no_peak = true;
  }

  const double relative_error =
      (predicted > 0 && !no_peak) ? std::abs(measured - predicted) / predicted : 1.0;
  const bool pass = !no_peak && relative_error < 0.05 && contrast > 0.9;

  if (config.format == "json") {
    json doc;
    doc["model"] = model_json(config.model);
    doc["omega_c_star"] = to_string(omega_c_star);
    doc["predicted_frequency"] = rounded(predicted);
    doc["measured_frequency"] = no_peak ? json(nullptr) : json(rounded(measured));
    doc["relative_error"] = no_peak ? json(nullptr) : json(rounded(relative_error));
    doc["contrast"] = rounded(contrast);
    doc["max_leakage"] = rounded(traj.max_leakage);
    doc["n_max"] = config.numerics.n_max;
    doc["pass"] = pass;
    if (no_peak) doc["note"] = "no oscillation detected";
    out << doc.dump(2) << "\n";
  } else if (config.format == "csv") {
    out << "t,p_e0,p_g3\n";
    for (int i = 0; i < samples; ++i) {
      out << format_number(times[i]) << "," << format_number(traj.populations(i, 1)) << ","
          << format_number(signal[i]) << "\n";
    }
    diag << (pass ? "PASS" : "FAIL") << " predicted=" << format_number(predicted)
         << " measured=" << (no_peak ? "none" : format_number(measured))
         << " contrast=" << format_number(contrast) << "\n";
  } else {
    out << "three-photon resonance check (|e,0> ↔ |g,3>)\n";
    out << "  omega_c* = " << to_string(omega_c_star) << " ≈ "
        << format_number(to_double(omega_c_star)) << "\n";
    out << "  predicted frequency = " << format_number(predicted) << "\n";
    if (no_peak) {
      out << "  measured frequency  = none (no oscillation detected)\n";
    } else {
      out << "  measured frequency  = " << format_number(measured) << "\n";
      out << "  relative error      = " << format_number(relative_error) << "\n";
    }
    out << "  contrast            = " << format_number(contrast) << "\n";
    out << "  max leakage         = " << format_number(traj.max_leakage) << "\n";
    out << "  result: " << (pass ? "PASS" : "FAIL") << " (5% frequency, 0.9 contrast)\n";
  }
  return pass ? 0 : 3;
}

int cmd_opspace(const RunConfig& config, double delta, bool dressed, std::ostream& out,
                std::ostream& diag) {
  (void)diag;
  const double lambda = config.model.lambda;
  const OperatorSpaceMatrix m = operator_space_matrix(delta, lambda, dressed);
  Eigen::EigenSolver<Eigen::Matrix4d> solver(m.entries);
  std::vector<std::complex<double>> eigenvalues(4);
  for (int i = 0; i < 4; ++i) eigenvalues[i] = solver.eigenvalues()(i);
  std::sort(eigenvalues.begin(), eigenvalues.end(),
            [](const std::complex<double>& a, const std::complex<double>& b) {
              return std::pair{a.real(), a.imag()} < std::pair{b.real(), b.imag()};
            });
  const double closed_form = dressed ? std::sqrt(delta * delta + 4 * lambda * lambda)
                                     : std::sqrt(delta * delta + 2 * lambda * lambda);
  const Eigen::Matrix4d p = projector_p_omega(delta, lambda);
  const double residual = (p * p - p).norm();

  if (config.format == "json") {
    json doc;
    doc["delta"] = rounded(delta);
    doc["lambda"] = rounded(lambda);
    doc["dressed"] = dressed;
    doc["labels"] = m.labels;
    json rows = json::array();
    for (int i = 0; i < 4; ++i) {
      json row = json::array();
      for (int j = 0; j < 4; ++j) row.push_back(rounded(m.entries(i, j)));
      rows.push_back(std::move(row));
    }
    doc["matrix"] = std::move(rows);
    json evs = json::array();
    for (const auto& ev : eigenvalues) {
      evs.push_back(json{{"re", rounded(ev.real())}, {"im", rounded(ev.imag())}});
    }
    doc["eigenvalues"] = std::move(evs);
    doc[dressed ? "omega" : "omega_prime"] = rounded(closed_form);
    json projector = json::array();
    for (int i = 0; i < 4; ++i) {
      json row = json::array();
      for (int j = 0; j < 4; ++j) row.push_back(rounded(p(i, j)));
      projector.push_back(std::move(row));
    }
    doc["p_omega"] = std::move(projector);
    doc["idempotence_residual"] = rounded(residual);
    out << doc.dump(2) << "\n";
  } else if (config.format == "csv") {
    out << "section,i,j,value\n";
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        out << "matrix," << i << "," << j << "," << format_number(m.entries(i, j)) << "\n";
      }
    }
    for (int i = 0; i < 4; ++i) {
      out << "eigenvalue_re," << i << ",," << format_number(eigenvalues[i].real()) << "\n";
      out << "eigenvalue_im," << i << ",," << format_number(eigenvalues[i].imag()) << "\n";
    }
    out << (dressed ? "omega" : "omega_prime") << ",,," << format_number(closed_form)
        << "\n";
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        out << "p_omega," << i << "," << j << "," << format_number(p(i, j)) << "\n";
      }
    }
    out << "idempotence_residual,,," << format_number(residual) << "\n";
  } else {
    out << (dressed ? "M (dressed basis: " : "M' (basis: ");
    for (size_t i = 0; i < m.labels.size(); ++i) {
      out << m.labels[i] << (i + 1 < m.labels.size() ? ", " : "");
    }
    out << ") at Δ = " << format_number(delta) << ", λ = " << format_number(lambda) << "\n";
    for (int i = 0; i < 4; ++i) {
      out << " ";
      for (int j = 0; j < 4; ++j) out << " " << format_number(m.entries(i, j));
      out << "\n";
    }
    out << "eigenvalues:";
    for (const auto& ev : eigenvalues) {
      out << " (" << format_number(ev.real()) << ", " << format_number(ev.imag()) << ")";
    }
    out << "\n";
    out << (dressed ? "Ω  = sqrt(Δ²+4λ²) = " : "Ω' = sqrt(Δ²+2λ²) = ")
        << format_number(closed_form) << "\n";
    out << "P_Ω = M²/Ω² (dressed):\n";
    for (int i = 0; i < 4; ++i) {
      out << " ";
      for (int j = 0; j < 4; ++j) out << " " << format_number(p(i, j));
      out << "\n";
    }
    out << "idempotence residual ‖P² − P‖_F = " << format_number(residual) << "\n";
  }
  return 0;
}

int cmd_render(const RunConfig& config, int order, std::ostream& out, std::ostream& diag) {
  if (order < 0 || order > 6) {
    diag << "render order must be in 0..6, got " << order << "\n";
    return 1;
  }
  if (order > 2) {
    out << "note: enumeration only — averaged weights are defined through order 2\n\n";
  }
  const auto groups = enumerate_diagrams(config.model, order);
  size_t diagram_count = 0;
  for (const auto& group : groups) diagram_count += group.diagrams.size();
  out << "order " << order << ": " << groups.size() << " composite operators, "
      << diagram_count << " diagrams\n\n";
  for (const auto& group : groups) {
    out << "composite: " << to_string(group.composite)
        << "   [Δ_total = " << to_string(group.total_detuning) << "]\n";
    for (const auto& diagram : group.diagrams) {
      out << render_diagram(diagram) << "\n";
      if (order > 0) out << "\n";
    }
    if (order == 0) out << "\n";
  }
  return 0;
}

}  // namespace jlm
