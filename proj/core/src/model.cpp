#include "jlm/model.hpp"

#include "jlm/errors.hpp"

namespace jlm {

void ModelSpec::validate() const {
  if (omega_e <= 0) throw ConfigError("omega_e must be positive");
  if (omega_c <= 0) throw ConfigError("omega_c must be positive");
  if (lambda < 0) throw ConfigError("lambda must be non-negative");
}

OperatorExpr free_hamiltonian(const ModelSpec& model) {
  return Scalar{model.omega_e / 2} * OperatorExpr::sigma_z() +
         Scalar{model.omega_c} * OperatorExpr::number();
}

OperatorExpr interaction_hamiltonian(const ModelSpec& model) {
  const OperatorExpr co_rotating =
      OperatorExpr::sigma_p() * OperatorExpr::annihilate() +
      OperatorExpr::sigma_m() * OperatorExpr::create();
  if (model.rwa) return co_rotating.shifted_lambda(1);
  const OperatorExpr counter_rotating =
      OperatorExpr::sigma_p() * OperatorExpr::create() +
      OperatorExpr::sigma_m() * OperatorExpr::annihilate();
  return (co_rotating + counter_rotating).shifted_lambda(1);
}

}  // namespace jlm
