#include <cstdint>
#include <limits>

#include "doctest.h"
#include "fracreduce/rational.hpp"

using namespace fracreduce;

TEST_CASE("rational normalization") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-3, -6) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(0, -7).den == 1);
  CHECK(Rational(7).is_integer());
  CHECK_FALSE(Rational(7, 2).is_integer());
  CHECK(Rational(0).is_zero());
  CHECK_THROWS_AS(Rational(1, 0), OverflowError);
}

TEST_CASE("rational arithmetic") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK(-Rational(3, 4) == Rational(-3, 4));
  CHECK_THROWS_AS(Rational(1) / Rational(0), OverflowError);

  // gcd pre-reduction keeps intermediates small when the result fits
  const Rational big(INT64_MAX / 3, 1);
  CHECK(big * Rational(3, INT64_MAX / 3) == Rational(3));
}

TEST_CASE("rational ordering") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(7, 4) > Rational(3, 2));
  CHECK(Rational(2, 4) <= Rational(1, 2));
  // cross-multiplication must not overflow for large parts
  CHECK(Rational(INT64_MAX, 2) > Rational(INT64_MAX / 2, 2));
}

TEST_CASE("rational overflow is an error, not a wraparound") {
  const Rational huge(INT64_MAX, 1);
  CHECK_THROWS_AS(huge + huge, OverflowError);
  CHECK_THROWS_AS(huge * Rational(2), OverflowError);
  CHECK_THROWS_AS(-Rational(INT64_MIN, 1), OverflowError);
}

TEST_CASE("lcm_i64") {
  CHECK(lcm_i64(4, 6) == 12);
  CHECK(lcm_i64(1, 7) == 7);
  CHECK(lcm_i64(8, 8) == 8);
  CHECK_THROWS_AS(lcm_i64(INT64_MAX - 1, INT64_MAX - 2), OverflowError);
}

TEST_CASE("rational to_string") {
  CHECK(to_string(Rational(3)) == "3");
  CHECK(to_string(Rational(-7, 4)) == "-7/4");
  CHECK(to_string(Rational(0)) == "0");
}

TEST_CASE("to_double") {
  CHECK(Rational(1, 2).to_double() == doctest::Approx(0.5));
  CHECK(Rational(-7, 4).to_double() == doctest::Approx(-1.75));
}
