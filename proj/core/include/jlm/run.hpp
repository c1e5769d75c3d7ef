#pragma once

#include <iosfwd>
#include <string>

#include "jlm/effective.hpp"
#include "jlm/model.hpp"
#include "jlm/numerics.hpp"

namespace jlm {

/// Parsed run configuration. Frequencies arrive as exact rational strings;
/// decimals are rejected for them (resonance detection is exact) but allowed
/// for λ, which never enters a resonance test.
struct RunConfig {
  ModelSpec model;
  int order = 1;
  FockConfig numerics;
  std::string format = "text";  // json | csv | text
  std::string out_path;
};

/// Reads a UTF-8 key=value file ('#' starts a comment). Unknown keys and
/// out-of-range values throw ConfigError.
RunConfig load_config(const std::string& path);
RunConfig parse_config_text(const std::string& text);
void validate(const RunConfig& config);

/// Commands return process exit codes: 0 ok, 1 config error, 2 degeneracy
/// error, 3 numerical-validity error. Reports go to `out`, diagnostics and
/// progress notes to `diag`.
int cmd_expand(const RunConfig& config, std::ostream& out, std::ostream& diag);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& diag);
int cmd_opspace(const RunConfig& config, double delta, bool dressed, std::ostream& out,
                std::ostream& diag);
int cmd_render(const RunConfig& config, int order, std::ostream& out, std::ostream& diag);

/// JSON document for one correction, schema:
///   {model, order, resonant_terms[], discarded_terms[], audit{identity_dropped[]}}
/// with each term {coeff_num, coeff_den, coeff_im_num, coeff_im_den,
/// lambda_power, omega_power, atomic_label, bosonic:[{m,n,weight}], sqrt_factor}.
std::string correction_to_json(const ModelSpec& model, const EffectiveCorrection& corr);

/// Rebuilds the operator sum serialized under `key` ("resonant_terms" or
/// "identity_dropped") from a document produced by correction_to_json;
/// the round trip reproduces the canonical form exactly.
OperatorExpr expr_from_json(const std::string& json_text, const std::string& key);

/// Same, for a bare JSON array of term objects (e.g. one discarded entry).
OperatorExpr expr_from_json_terms(const std::string& terms_array_text);

/// Fixed 12-significant-digit float formatting used for all emitted numbers.
std::string format_number(double value);

}  // namespace jlm
