#include <doctest.h>

#include "mz/errors.hpp"
#include "mz/rational.hpp"

using mz::Rational;

TEST_CASE("rationals are stored in lowest terms") {
  CHECK(Rational(6, -4).to_string() == "-3/2");
  CHECK(Rational(0, 7).to_string() == "0");
  CHECK(Rational(10, 5).is_integer());
  CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("arithmetic promotes to GMP and demotes back") {
  const Rational big = Rational(1L << 62) * Rational(1L << 62);
  CHECK_FALSE(big.is_small());
  CHECK(big.to_string() == "21267647932558653966460912964485513216");
  const Rational back = big / Rational(1L << 62);
  CHECK(back.is_small());
  CHECK(back == Rational(1L << 62));
  CHECK(Rational(2).pow(100).to_string() == "1267650600228229401496703205376");
  CHECK(Rational(2).pow(-3) == Rational(1, 8));
}

TEST_CASE("parsing round-trips") {
  for (const char* s : {"0", "-5", "7/3", "-123456789012345678901234567891/2"}) {
    CHECK(Rational::from_string(s).to_string() == s);
  }
  CHECK(Rational::from_string("4/6") == Rational(2, 3));
  CHECK_THROWS(Rational::from_string("1/x"));
}

TEST_CASE("ordering and integer conversion") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(0));
  CHECK(Rational(42).to_int64() == 42);
  CHECK_THROWS_AS(Rational(1, 2).to_int64(), mz::ConsistencyError);
}
