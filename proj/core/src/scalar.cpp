#include "jlm/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace jlm {

using Integer = boost::multiprecision::mpz_int;

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string to_string(const Rational& r) { return r.str(); }

namespace {

bool is_integer_token(std::string_view s) {
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational rational_from_string(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  const std::string_view num_part = slash == std::string_view::npos ? s : trim(s.substr(0, slash));
  const std::string_view den_part = slash == std::string_view::npos ? "1" : trim(s.substr(slash + 1));
  if (!is_integer_token(num_part) || !is_integer_token(den_part)) {
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  }
  const Integer num{std::string(num_part)};
  const Integer den{std::string(den_part)};
  if (den == 0) {
    throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  }
  return {num, den};  // two-argument construction canonicalizes
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re += o.re;
  im += o.im;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  const Rational new_re = re * o.re - im * o.im;
  im = re * o.im + im * o.re;
  re = new_re;
  return *this;
}

Rational reciprocal(const Rational& r) {
  if (r == 0) throw std::domain_error("reciprocal of zero");
  return Rational{denominator(r), numerator(r)};
}

std::string to_string(const Scalar& s) {
  if (s.im == 0) return to_string(s.re);
  if (s.re == 0) return to_string(s.im) + "i";
  std::string out = to_string(s.re);
  out += (s.im > 0) ? " + " : " - ";
  out += to_string(abs(s.im)) + "i";
  return out;
}

}  // namespace jlm
