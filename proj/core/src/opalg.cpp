#include "jlm/opalg.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>

namespace jlm {

AtomicBlock AtomicBlock::unit(int bra, int ket) {
  AtomicBlock b;
  b.entry(bra, ket) = Scalar{1};
  return b;
}

AtomicBlock AtomicBlock::identity() {
  AtomicBlock b;
  b.entry(0, 0) = Scalar{1};
  b.entry(1, 1) = Scalar{1};
  return b;
}

AtomicBlock AtomicBlock::sigma_p() { return unit(1, 0); }
AtomicBlock AtomicBlock::sigma_m() { return unit(0, 1); }

AtomicBlock AtomicBlock::sigma_z() {
  AtomicBlock b;
  b.entry(0, 0) = Scalar{-1};
  b.entry(1, 1) = Scalar{1};
  return b;
}

AtomicBlock AtomicBlock::sigma_x() {
  AtomicBlock b;
  b.entry(0, 1) = Scalar{1};
  b.entry(1, 0) = Scalar{1};
  return b;
}

AtomicBlock AtomicBlock::proj_g() { return unit(0, 0); }
AtomicBlock AtomicBlock::proj_e() { return unit(1, 1); }

AtomicBlock AtomicBlock::operator*(const AtomicBlock& o) const {
  AtomicBlock out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      Scalar acc;
      for (int k = 0; k < 2; ++k) acc += entry(i, k) * o.entry(k, j);
      out.entry(i, j) = acc;
    }
  }
  return out;
}

AtomicBlock AtomicBlock::adjoint() const {
  AtomicBlock out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) out.entry(i, j) = entry(j, i).conj();
  }
  return out;
}

bool AtomicBlock::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Scalar& s) { return s.is_zero(); });
}

namespace {

using TermKey = std::tuple<int, int, int, int, int>;  // (lambda, bra, ket, m, n)

TermKey key_of(const OperatorTerm& t) {
  return {t.lambda_power, t.bra, t.ket, t.bosonic.create_power, t.bosonic.annihilate_power};
}

class Accumulator {
 public:
  void add(const TermKey& key, const Scalar& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void add(const OperatorTerm& t) { add(key_of(t), t.coeff); }

  OperatorExpr build() &&;

 private:
  std::map<TermKey, Scalar> terms_;
};

}  // namespace

class ExprBuilder {
 public:
  static OperatorExpr from_sorted(std::vector<OperatorTerm> terms) {
    OperatorExpr e;
    e.terms_ = std::move(terms);
    return e;
  }
};

namespace {

OperatorExpr Accumulator::build() && {
  std::vector<OperatorTerm> out;
  out.reserve(terms_.size());
  for (auto& [key, coeff] : terms_) {
    const auto [lambda, bra, ket, m, n] = key;
    out.push_back({std::move(coeff), lambda, bra, ket, BosonicMonomial{m, n}});
  }
  return ExprBuilder::from_sorted(std::move(out));
}

Rational binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Rational acc{1};
  for (int i = 0; i < k; ++i) acc = acc * (n - i) / (i + 1);
  return acc;
}

/// a^n1 a†^m2 = sum_k k! C(n1,k) C(m2,k) a†^(m2-k) a^(n1-k); folds the full
/// monomial product (m1,n1)·(m2,n2) into normal order.
void accumulate_monomial_product(Accumulator& acc, const Scalar& coeff, int lambda,
                                 int bra, int ket, const BosonicMonomial& a,
                                 const BosonicMonomial& b) {
  const int m1 = a.create_power, n1 = a.annihilate_power;
  const int m2 = b.create_power, n2 = b.annihilate_power;
  Rational factorial{1};
  for (int k = 0; k <= std::min(n1, m2); ++k) {
    if (k > 0) factorial *= k;
    const Rational c = factorial * binomial(n1, k) * binomial(m2, k);
    acc.add({lambda, bra, ket, m1 + m2 - k, n1 + n2 - k}, coeff * Scalar{c});
  }
}

}  // namespace

OperatorExpr OperatorExpr::identity() { return atomic(AtomicBlock::identity()); }

OperatorExpr OperatorExpr::scalar(const Scalar& s) {
  return s * identity();
}

OperatorExpr OperatorExpr::atomic(const AtomicBlock& block, int lambda_power) {
  Accumulator acc;
  for (int bra = 0; bra < 2; ++bra) {
    for (int ket = 0; ket < 2; ++ket) {
      acc.add({lambda_power, bra, ket, 0, 0}, block.entry(bra, ket));
    }
  }
  return std::move(acc).build();
}

OperatorExpr OperatorExpr::bosonic(BosonicMonomial mono, int lambda_power) {
  Accumulator acc;
  acc.add({lambda_power, 0, 0, mono.create_power, mono.annihilate_power}, Scalar{1});
  acc.add({lambda_power, 1, 1, mono.create_power, mono.annihilate_power}, Scalar{1});
  return std::move(acc).build();
}

OperatorExpr OperatorExpr::single(Scalar coeff, int lambda_power, const AtomicBlock& block,
                                  BosonicMonomial mono) {
  Accumulator acc;
  for (int bra = 0; bra < 2; ++bra) {
    for (int ket = 0; ket < 2; ++ket) {
      acc.add({lambda_power, bra, ket, mono.create_power, mono.annihilate_power},
              coeff * block.entry(bra, ket));
    }
  }
  return std::move(acc).build();
}

OperatorExpr& OperatorExpr::operator+=(const OperatorExpr& o) {
  Accumulator acc;
  for (const auto& t : terms_) acc.add(t);
  for (const auto& t : o.terms_) acc.add(t);
  *this = std::move(acc).build();
  return *this;
}

OperatorExpr& OperatorExpr::operator-=(const OperatorExpr& o) {
  Accumulator acc;
  for (const auto& t : terms_) acc.add(t);
  for (const auto& t : o.terms_) acc.add(key_of(t), -t.coeff);
  *this = std::move(acc).build();
  return *this;
}

OperatorExpr operator-(const OperatorExpr& a) { return Scalar{-1} * a; }

OperatorExpr operator*(const Scalar& s, const OperatorExpr& e) {
  Accumulator acc;
  for (const auto& t : e.terms()) acc.add(key_of(t), s * t.coeff);
  return std::move(acc).build();
}

OperatorExpr OperatorExpr::shifted_lambda(int shift) const {
  Accumulator acc;
  for (const auto& t : terms_) {
    acc.add({t.lambda_power + shift, t.bra, t.ket, t.bosonic.create_power,
             t.bosonic.annihilate_power},
            t.coeff);
  }
  return std::move(acc).build();
}

OperatorExpr OperatorExpr::adjoint() const {
  Accumulator acc;
  for (const auto& t : terms_) {
    acc.add({t.lambda_power, t.ket, t.bra, t.bosonic.annihilate_power,
             t.bosonic.create_power},
            t.coeff.conj());
  }
  return std::move(acc).build();
}

bool OperatorExpr::is_hermitian() const { return *this == adjoint(); }

std::strong_ordering OperatorExpr::compare(const OperatorExpr& a, const OperatorExpr& b) {
  const auto na = a.terms_.size(), nb = b.terms_.size();
  for (size_t i = 0; i < std::min(na, nb); ++i) {
    const auto& ta = a.terms_[i];
    const auto& tb = b.terms_[i];
    if (auto c = key_of(ta) <=> key_of(tb); c != 0) return c;
    if (ta.coeff.re != tb.coeff.re) {
      return ta.coeff.re < tb.coeff.re ? std::strong_ordering::less
                                       : std::strong_ordering::greater;
    }
    if (ta.coeff.im != tb.coeff.im) {
      return ta.coeff.im < tb.coeff.im ? std::strong_ordering::less
                                       : std::strong_ordering::greater;
    }
  }
  return na <=> nb;
}

OperatorExpr multiply(const OperatorExpr& a, const OperatorExpr& b) {
  Accumulator acc;
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) {
      if (ta.ket != tb.bra) continue;  // matrix-unit product
      accumulate_monomial_product(acc, ta.coeff * tb.coeff,
                                  ta.lambda_power + tb.lambda_power, ta.bra, tb.ket,
                                  ta.bosonic, tb.bosonic);
    }
  }
  return std::move(acc).build();
}

OperatorExpr commutator(const OperatorExpr& a, const OperatorExpr& b) {
  return multiply(a, b) - multiply(b, a);
}

OperatorExpr normal_order(std::span<const BosonOp> sequence) {
  // Fold left to right: appending a keeps normal order, appending a† uses
  // a^n a† = a† a^n + n a^(n-1).
  std::map<BosonicMonomial, Rational> acc{{BosonicMonomial{0, 0}, Rational{1}}};
  for (const BosonOp op : sequence) {
    std::map<BosonicMonomial, Rational> next;
    for (const auto& [mono, c] : acc) {
      if (op == BosonOp::annihilate) {
        next[{mono.create_power, mono.annihilate_power + 1}] += c;
      } else {
        next[{mono.create_power + 1, mono.annihilate_power}] += c;
        if (mono.annihilate_power > 0) {
          next[{mono.create_power, mono.annihilate_power - 1}] +=
              c * mono.annihilate_power;
        }
      }
    }
    acc = std::move(next);
  }
  OperatorExpr out;
  for (const auto& [mono, c] : acc) {
    if (c != 0) out += Scalar{c} * OperatorExpr::bosonic(mono);
  }
  return out;
}

MatrixResult to_matrix(const OperatorExpr& expr, int n_max, double lambda_value) {
  const int dim = 2 * (n_max + 1);
  MatrixResult result;
  result.matrix = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& t : expr.terms()) {
    const std::complex<double> base =
        t.coeff.to_complex() * std::pow(lambda_value, t.lambda_power);
    const int m = t.bosonic.create_power;
    const int n = t.bosonic.annihilate_power;
    for (int na = 0; na <= n_max; ++na) {
      if (na < n) continue;  // a^n annihilates
      const int nb = na - n + m;
      if (nb > n_max) {
        result.truncated = true;
        continue;
      }
      double amp = 1.0;
      for (int i = 0; i < n; ++i) amp *= static_cast<double>(na - i);
      for (int i = 0; i < m; ++i) amp *= static_cast<double>(nb - i);
      result.matrix(2 * nb + t.bra, 2 * na + t.ket) += base * std::sqrt(amp);
    }
  }
  return result;
}

std::optional<Scalar> scalar_ratio(const OperatorExpr& a, const OperatorExpr& b) {
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return Scalar{0};
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  if (ta.size() != tb.size()) return std::nullopt;
  // ratio = a0/b0 with exact complex division
  const Scalar& p = ta.front().coeff;
  const Scalar& q = tb.front().coeff;
  const Rational norm = q.re * q.re + q.im * q.im;
  const Scalar ratio{(p.re * q.re + p.im * q.im) / norm, (p.im * q.re - p.re * q.im) / norm};
  if (a == ratio * b) return ratio;
  return std::nullopt;
}

namespace {

std::string bosonic_label(const BosonicMonomial& m) {
  if (m.create_power == 0 && m.annihilate_power == 0) return "1";
  std::string s;
  if (m.create_power > 0) {
    s += "a†";
    if (m.create_power > 1) s += "^" + std::to_string(m.create_power);
  }
  if (m.annihilate_power > 0) {
    s += "a";
    if (m.annihilate_power > 1) s += "^" + std::to_string(m.annihilate_power);
  }
  return s;
}

std::string atomic_label(int bra, int ket) {
  if (bra == 0 && ket == 0) return "|g><g|";
  if (bra == 0 && ket == 1) return "σ-";
  if (bra == 1 && ket == 0) return "σ+";
  return "|e><e|";
}

}  // namespace

std::string to_string(const OperatorExpr& expr) {
  if (expr.is_zero()) return "0";
  std::string out;
  for (const auto& t : expr.terms()) {
    if (!out.empty()) out += " + ";
    out += "(" + to_string(t.coeff) + ")";
    if (t.lambda_power > 0) {
      out += " λ";
      if (t.lambda_power > 1) out += "^" + std::to_string(t.lambda_power);
    }
    out += " " + atomic_label(t.bra, t.ket) + "⊗" + bosonic_label(t.bosonic);
  }
  return out;
}

std::vector<PauliTerm> to_pauli_basis(const OperatorExpr& expr) {
  // Per (lambda, m, n): c_gg, c_ge, c_eg, c_ee ->
  //   I  component (c_ee + c_gg)/2, sz component (c_ee - c_gg)/2,
  //   s+ = c_eg, s- = c_ge.
  struct Bucket {
    std::array<Scalar, 4> units;  // gg, ge, eg, ee
  };
  std::map<std::pair<int, BosonicMonomial>, Bucket> buckets;
  for (const auto& t : expr.terms()) {
    buckets[{t.lambda_power, t.bosonic}].units[2 * t.bra + t.ket] += t.coeff;
  }
  const Scalar half{Rational{1, 2}};
  std::map<std::pair<std::string, int>, std::vector<std::pair<BosonicMonomial, Scalar>>>
      grouped;
  const auto push = [&](const char* label, int lambda, const BosonicMonomial& mono,
                        const Scalar& c) {
    if (!c.is_zero()) grouped[{label, lambda}].emplace_back(mono, c);
  };
  for (const auto& [key, bucket] : buckets) {
    const auto& [lambda, mono] = key;
    const Scalar& gg = bucket.units[0];
    const Scalar& ge = bucket.units[1];
    const Scalar& eg = bucket.units[2];
    const Scalar& ee = bucket.units[3];
    push("I", lambda, mono, half * (ee + gg));
    push("sz", lambda, mono, half * (ee - gg));
    push("s+", lambda, mono, eg);
    push("s-", lambda, mono, ge);
  }
  // Stable label order: I, sz, s+, s-.
  const auto rank = [](const std::string& l) {
    if (l == "I") return 0;
    if (l == "sz") return 1;
    if (l == "s+") return 2;
    return 3;
  };
  std::vector<PauliTerm> out;
  for (auto& [key, bosonic] : grouped) {
    out.push_back({key.first, key.second, std::move(bosonic)});
  }
  std::sort(out.begin(), out.end(), [&](const PauliTerm& a, const PauliTerm& b) {
    return std::tuple{a.lambda_power, rank(a.label)} <
           std::tuple{b.lambda_power, rank(b.label)};
  });
  return out;
}

}  // namespace jlm
