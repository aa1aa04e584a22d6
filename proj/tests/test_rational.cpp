#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "superlink/errors.hpp"
#include "superlink/rational.hpp"
#include "superlink/weight.hpp"

using namespace superlink;

TEST_CASE("parse and print rationals") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK(parse_rational("+2/4") == Rational(1, 2));
  CHECK(parse_rational(" 7 ") == 7);
  CHECK(to_string(Rational(-1, 2)) == "-1/2");
  CHECK(to_string(Rational(4, 2)) == "2");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
  CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
}

TEST_CASE("floor, ceil, frac") {
  CHECK(floor(Rational(-1, 2)) == -1);
  CHECK(ceil(Rational(-1, 2)) == 0);
  CHECK(floor(Rational(7, 2)) == 3);
  CHECK(ceil(Rational(7, 2)) == 4);
  CHECK(frac(Rational(-1, 3)) == Rational(2, 3));
  CHECK(frac(Rational(5)) == 0);
  CHECK(abs(Rational(-3, 4)) == Rational(3, 4));
  CHECK(is_integer(Rational(6, 3)));
  CHECK(Rational(0) == 0);
  CHECK(0 == Rational(0));
  CHECK(Rational(1, 2) != 0);
}

TEST_CASE("weights") {
  const Weight a = Weight::from_ints({1, 2});
  const Weight b{Rational(1, 2), Rational(-1)};
  CHECK((a + b).str() == "(3/2,1)");
  CHECK((a - a).is_zero());
  CHECK((Rational(2) * b) == Weight::from_ints({1, -2}));
  CHECK(-a == Weight::from_ints({-1, -2}));
  CHECK(b < a);
  CHECK(WeightHash{}(a) == WeightHash{}(Weight::from_ints({1, 2})));
}
