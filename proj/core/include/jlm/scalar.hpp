#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <complex>
#include <string>
#include <string_view>

namespace jlm {

/// Exact rational number. All symbolic coefficients in the library are built
/// from these; floating point enters only when an expression is realized as a
/// matrix or a weight is evaluated at a time t.
using Rational = boost::multiprecision::mpq_rational;

double to_double(const Rational& r);

/// Renders as "p" or "p/q" in lowest terms.
std::string to_string(const Rational& r);

/// Parses "p", "-p", or "p/q". Decimal notation is rejected; callers that
/// accept decimals (e.g. for coupling strengths) must parse those themselves.
/// Throws std::invalid_argument on malformed input or zero denominator.
Rational rational_from_string(std::string_view text);

/// Exact complex rational coefficient.
struct Scalar {
  Rational re{0};
  Rational im{0};

  Scalar() = default;
  Scalar(Rational real) : re(std::move(real)) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational real, Rational imag) : re(std::move(real)), im(std::move(imag)) {}
  Scalar(long real) : re(real) {}  // NOLINT(google-explicit-constructor)

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }
  Scalar conj() const { return {re, -im}; }
  std::complex<double> to_complex() const { return {to_double(re), to_double(im)}; }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator-(const Scalar& a) { return {-a.re, -a.im}; }
  friend bool operator==(const Scalar& a, const Scalar& b) = default;
};

/// Exact reciprocal; throws std::domain_error on zero.
Rational reciprocal(const Rational& r);

std::string to_string(const Scalar& s);

}  // namespace jlm
