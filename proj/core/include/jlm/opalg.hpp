#pragma once

#include <Eigen/Dense>

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "jlm/scalar.hpp"

namespace jlm {

/// 2x2 operator on the two-level system, basis order (|g>, |e>).
class AtomicBlock {
 public:
  AtomicBlock() = default;

  static AtomicBlock zero() { return {}; }
  static AtomicBlock unit(int bra, int ket);  // |bra><ket|
  static AtomicBlock identity();
  static AtomicBlock sigma_p();  // |e><g|
  static AtomicBlock sigma_m();  // |g><e|
  static AtomicBlock sigma_z();  // |e><e| - |g><g|
  static AtomicBlock sigma_x();
  static AtomicBlock proj_g();
  static AtomicBlock proj_e();

  const Scalar& entry(int bra, int ket) const { return entries_[2 * bra + ket]; }
  Scalar& entry(int bra, int ket) { return entries_[2 * bra + ket]; }

  AtomicBlock operator*(const AtomicBlock& o) const;
  AtomicBlock adjoint() const;
  bool is_zero() const;

  friend bool operator==(const AtomicBlock&, const AtomicBlock&) = default;

 private:
  std::array<Scalar, 4> entries_{};  // row-major, bra-major
};

/// Normal-ordered bosonic monomial a†^m a^n.
struct BosonicMonomial {
  int create_power = 0;      // m
  int annihilate_power = 0;  // n
  friend auto operator<=>(const BosonicMonomial&, const BosonicMonomial&) = default;
};

enum class BosonOp : std::uint8_t { annihilate, create };

/// One term of a canonical expression:
///   coeff * λ^lambda_power * |bra><ket| ⊗ a†^m a^n.
/// The canonical form keeps exactly one matrix unit and one monomial per
/// term; sums of blocks or of monomials are spread over several terms.
struct OperatorTerm {
  Scalar coeff;
  int lambda_power = 0;
  int bra = 0;  // 0 = g, 1 = e
  int ket = 0;
  BosonicMonomial bosonic;

  friend bool operator==(const OperatorTerm&, const OperatorTerm&) = default;
};

/// A mixed two-level ⊗ bosonic operator as a sum of canonical terms.
///
/// Invariants: terms are sorted by (lambda_power, bra, ket, m, n), like terms
/// are merged, zero coefficients are never stored. Two expressions are equal
/// iff their term lists are identical field by field. Values are immutable
/// after construction; every operation below is a pure function.
class OperatorExpr {
 public:
  OperatorExpr() = default;

  static OperatorExpr zero() { return {}; }
  static OperatorExpr identity();
  static OperatorExpr scalar(const Scalar& s);
  static OperatorExpr atomic(const AtomicBlock& block, int lambda_power = 0);
  static OperatorExpr bosonic(BosonicMonomial mono, int lambda_power = 0);
  static OperatorExpr single(Scalar coeff, int lambda_power, const AtomicBlock& block,
                             BosonicMonomial mono);

  // Common building blocks (lambda_power 0, coefficient 1).
  static OperatorExpr sigma_p() { return atomic(AtomicBlock::sigma_p()); }
  static OperatorExpr sigma_m() { return atomic(AtomicBlock::sigma_m()); }
  static OperatorExpr sigma_z() { return atomic(AtomicBlock::sigma_z()); }
  static OperatorExpr sigma_x() { return atomic(AtomicBlock::sigma_x()); }
  static OperatorExpr proj_g() { return atomic(AtomicBlock::proj_g()); }
  static OperatorExpr proj_e() { return atomic(AtomicBlock::proj_e()); }
  static OperatorExpr annihilate() { return bosonic({0, 1}); }
  static OperatorExpr create() { return bosonic({1, 0}); }
  static OperatorExpr number() { return bosonic({1, 1}); }

  const std::vector<OperatorTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  OperatorExpr& operator+=(const OperatorExpr& o);
  OperatorExpr& operator-=(const OperatorExpr& o);
  friend OperatorExpr operator+(OperatorExpr a, const OperatorExpr& b) { return a += b; }
  friend OperatorExpr operator-(OperatorExpr a, const OperatorExpr& b) { return a -= b; }
  friend OperatorExpr operator-(const OperatorExpr& a);
  friend OperatorExpr operator*(const Scalar& s, const OperatorExpr& e);

  /// Multiplies by λ^shift without touching coefficients.
  OperatorExpr shifted_lambda(int shift) const;

  OperatorExpr adjoint() const;
  bool is_hermitian() const;

  friend bool operator==(const OperatorExpr&, const OperatorExpr&) = default;

  /// Total order consistent with equality; used for deterministic grouping.
  static std::strong_ordering compare(const OperatorExpr& a, const OperatorExpr& b);

 private:
  friend class ExprBuilder;
  std::vector<OperatorTerm> terms_;
};

/// Canonical normal-ordered product: atomic blocks multiply as 2x2 matrices,
/// bosonic parts multiply and re-order via [a, a†] = 1, λ grades add.
OperatorExpr multiply(const OperatorExpr& a, const OperatorExpr& b);
inline OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b) {
  return multiply(a, b);
}

OperatorExpr commutator(const OperatorExpr& a, const OperatorExpr& b);

inline bool equals(const OperatorExpr& a, const OperatorExpr& b) { return a == b; }

/// Rewrites an arbitrary product sequence of a / a† symbols as a sum of
/// normal-ordered monomials with integer coefficients. The sequence is read
/// left to right as an operator product.
OperatorExpr normal_order(std::span<const BosonOp> sequence);

struct MatrixResult {
  Eigen::MatrixXcd matrix;
  /// True when some a† hit the top Fock level and the outgoing amplitude was
  /// dropped. Reported, never fatal; assertions should stay on the interior
  /// photon range.
  bool truncated = false;
};

/// Realizes the expression on the truncated space {|g,0>,|e,0>,...,|e,n_max>}
/// (atomic index fastest), substituting lambda_value for each λ grade.
MatrixResult to_matrix(const OperatorExpr& expr, int n_max, double lambda_value);

/// If a == s*b for a scalar s (with b nonzero), returns s.
std::optional<Scalar> scalar_ratio(const OperatorExpr& a, const OperatorExpr& b);

std::string to_string(const OperatorExpr& expr);

/// View of an expression in the {1, σz, σ+, σ-} atomic basis, grouped per
/// (lambda_power, label); used for display and serialization.
struct PauliTerm {
  std::string label;  // "I", "sz", "s+", "s-"
  int lambda_power = 0;
  std::vector<std::pair<BosonicMonomial, Scalar>> bosonic;
};
std::vector<PauliTerm> to_pauli_basis(const OperatorExpr& expr);

}  // namespace jlm
