#include <catch2/catch_amalgamated.hpp>

#include "jlm/scalar.hpp"

using namespace jlm;

TEST_CASE("rational parsing and canonical form") {
  CHECK(rational_from_string("1/3") == Rational{1, 3});
  CHECK(rational_from_string("-9/12") == Rational{-3, 4});
  CHECK(numerator(rational_from_string("-9/12")) == -3);
  CHECK(denominator(rational_from_string(" 6/4 ")) == 2);
  CHECK(rational_from_string("7") == 7);
  CHECK(to_string(rational_from_string("-9/12")) == "-3/4");

  CHECK_THROWS_AS(rational_from_string("0.333"), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_string("abc"), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_string(""), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_string("1/2/3"), std::invalid_argument);
}

TEST_CASE("zero compares equal regardless of construction route") {
  const Scalar a{Rational{1, 3}};
  const Scalar b{Rational{2, 6}};
  CHECK(a == b);
  CHECK((a - b).is_zero());
  CHECK(Scalar{Rational{0}} == Scalar{Rational{0, 7}});
}

TEST_CASE("complex scalar arithmetic is exact") {
  const Scalar i{0, 1};
  CHECK(i * i == Scalar{-1});
  const Scalar z{Rational{1, 2}, Rational{-1, 3}};
  CHECK(z * z.conj() == Scalar{Rational{1, 4} + Rational{1, 9}});
  CHECK(z + (-z) == Scalar{0});
  CHECK(reciprocal(Rational{-2, 3}) == Rational{-3, 2});
  CHECK_THROWS_AS(reciprocal(Rational{0}), std::domain_error);
}

TEST_CASE("scalar rendering") {
  CHECK(to_string(Scalar{Rational{9, 4}}) == "9/4");
  CHECK(to_string(Scalar{0, Rational{1, 2}}) == "1/2i");
  CHECK(to_string(Scalar{Rational{1}, Rational{-1, 3}}) == "1 - 1/3i");
}
