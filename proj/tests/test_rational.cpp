#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "hullcert/rational.hpp"

using hullcert::ParseError;
using hullcert::Rational;

TEST_CASE("decimals are read exactly in base 10") {
  CHECK(Rational::parse("0.85") == Rational(17, 20));
  CHECK(Rational::parse("-0.85") == Rational(-17, 20));
  CHECK(Rational::parse(".5") == Rational(1, 2));
  CHECK(Rational::parse("2.") == Rational(2));
  CHECK(Rational::parse("+0.1") == Rational(1, 10));
  CHECK(Rational::parse(" 0.07 ") == Rational(7, 100));
}

TEST_CASE("fractions and integers") {
  CHECK(Rational::parse("6/8") == Rational(3, 4));
  CHECK(Rational::parse("-2/4") == Rational(-1, 2));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse("123456789012345678901234567890/3").str() == "41152263004115226300411522630/1");
}

TEST_CASE("malformed text is rejected") {
  for (const char* bad : {"", "abc", "1/0", "1.2.3", "1/-2", "--1", "1/2/3", ".", "0x10", "1e3"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(Rational::parse(bad), ParseError);
  }
}

TEST_CASE("canonical rendering round-trips") {
  CHECK(Rational().str() == "0/1");
  CHECK(Rational(4, -6).str() == "-2/3");
  for (const Rational& r : {Rational(0), Rational(-5, 7), Rational(161, 20), Rational(1)}) {
    CHECK(Rational::parse(r.str()) == r);
  }
  std::ostringstream os;
  os << Rational(3, 9);
  CHECK(os.str() == "1/3");
}

TEST_CASE("arithmetic and ordering") {
  const Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == b);
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(-a == Rational(-1, 3));
  CHECK(b < a);
  CHECK(abs(Rational(-2, 5)) == Rational(2, 5));
  CHECK_THROWS_AS(a / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("floor, integrality and decimal display") {
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(4).floor() == 4);
  CHECK(Rational(4).is_integer());
  CHECK_FALSE(Rational(1, 2).is_integer());
  CHECK(Rational(1, 3).to_decimal(4) == "0.3333");
  CHECK(Rational(-1, 8).to_decimal(2) == "-0.12");
  CHECK(Rational(-1, 1000).to_decimal(2) == "-0.00");
  CHECK(Rational(5).to_decimal(0) == "5");
}

TEST_CASE("choose2 and list parsing") {
  CHECK(hullcert::choose2(8) == Rational(28));
  CHECK(hullcert::choose2(1) == Rational(0));
  const auto xs = hullcert::parse_rational_list("0.85,1/2,0");
  REQUIRE(xs.size() == 3);
  CHECK(xs[0] == Rational(17, 20));
  CHECK(xs[1] == Rational(1, 2));
  CHECK(xs[2].is_zero());
  CHECK_THROWS_AS(hullcert::parse_rational_list("0.5,,1"), ParseError);
}
