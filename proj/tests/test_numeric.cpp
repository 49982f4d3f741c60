// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <limits>

#include "aptri/numeric.hpp"

using namespace aptri;

namespace {

template <typename Fn>
ErrorCode code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected aptri::Error");
  return ErrorCode::Internal;
}

}  // namespace

TEST_CASE("parse_rational accepts integers, fractions and decimals") {
  CHECK(parse_rational("8") == Rational(8));
  CHECK(parse_rational("36/13") == Rational(36, 13));
  CHECK(parse_rational("2.75") == Rational(11, 4));
  CHECK(parse_rational("-3/4") == Rational(-3, 4));
  CHECK(parse_rational(".5") == Rational(1, 2));
  CHECK(parse_rational("3.") == Rational(3));
  CHECK(parse_rational(" 12/34 ") == Rational(6, 17));
  CHECK(parse_rational("+7") == Rational(7));
  CHECK(parse_rational("0.125") == Rational(1, 8));
}

TEST_CASE("parse_rational rejects malformed input") {
  CHECK(code_of([] { parse_rational(""); }) == ErrorCode::Parse);
  CHECK(code_of([] { parse_rational("abc"); }) == ErrorCode::Parse);
  CHECK(code_of([] { parse_rational("1/0"); }) == ErrorCode::Parse);
  CHECK(code_of([] { parse_rational("1e5"); }) == ErrorCode::Parse);
  CHECK(code_of([] { parse_rational("1/2/3"); }) == ErrorCode::Parse);
  CHECK(code_of([] { parse_rational("."); }) == ErrorCode::Parse);
  CHECK(code_of([] { parse_rational("--1"); }) == ErrorCode::Parse);
}

TEST_CASE("format_rational round trips") {
  CHECK(format_rational(Rational(36, 13)) == "36/13");
  CHECK(format_rational(Rational(3)) == "3");
  CHECK(format_rational(Rational(-1, 2)) == "-1/2");
  CHECK(parse_rational(format_rational(Rational(123456789, 987654321))) ==
        Rational(123456789, 987654321));
}

TEST_CASE("to_double handles ordinary and extreme magnitudes") {
  CHECK(to_double(Rational(1, 3)) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(to_double(Rational(0)) == 0.0);
  CHECK(to_double(Rational(-5, 2)) == -2.5);

  const BigInt huge = BigInt(1) << 2000;
  CHECK(to_double(Rational(huge, 3)) == HUGE_VAL);
  CHECK(to_double(Rational(3, huge)) == 0.0);
  // both operands huge, ratio modest
  CHECK(to_double(Rational(huge * 7, huge * 2)) == doctest::Approx(3.5));
}

TEST_CASE("integer square roots") {
  CHECK(isqrt(BigInt(0)) == 0);
  CHECK(isqrt(BigInt(15)) == 3);
  CHECK(isqrt(BigInt(16)) == 4);

  BigInt root;
  CHECK(is_perfect_square(BigInt(49), &root));
  CHECK(root == 7);
  CHECK_FALSE(is_perfect_square(BigInt(48)));
  CHECK_FALSE(is_perfect_square(BigInt(-4)));

  const BigInt big = BigInt("123456789123456789");
  CHECK(is_perfect_square(big * big));
  CHECK_FALSE(is_perfect_square(big * big + 1));
  CHECK_FALSE(is_perfect_square(big * big - 1));
}

TEST_CASE("sqrt_exact finds rational square roots") {
  REQUIRE(sqrt_exact(Rational(49, 169)).has_value());
  CHECK(*sqrt_exact(Rational(49, 169)) == Rational(7, 13));
  CHECK(*sqrt_exact(Rational(0)) == Rational(0));
  CHECK(*sqrt_exact(Rational(4)) == Rational(2));
  CHECK_FALSE(sqrt_exact(Rational(1, 2)).has_value());
  CHECK_FALSE(sqrt_exact(Rational(-1)).has_value());
  CHECK_FALSE(sqrt_exact(Rational(50, 49)).has_value());
}

TEST_CASE("checked_int64 guards the C boundary") {
  const BigInt max = std::numeric_limits<std::int64_t>::max();
  CHECK(checked_int64(max) == std::numeric_limits<std::int64_t>::max());
  CHECK(checked_int64(BigInt(-42)) == -42);
  CHECK(code_of([&] { checked_int64(max + 1); }) == ErrorCode::Overflow);
}
