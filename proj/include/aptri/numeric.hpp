// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "aptri/errors.hpp"

namespace aptri {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Nearest-double conversion, safe for operands far outside double range.
double to_double(const Rational& value);
double to_double(const BigInt& value);

/// Floor square root; requires n >= 0.
BigInt isqrt(const BigInt& n);

/// True iff n is a perfect square; optionally yields the root.
bool is_perfect_square(const BigInt& n, BigInt* root = nullptr);

/// Exact square root of a nonnegative rational, if one exists.
std::optional<Rational> sqrt_exact(const Rational& value);

/// Parses "8", "-8", "36/13" or "2.75" into an exact rational.
Rational parse_rational(std::string_view text);

/// Lowest-terms rendering: "36/13", or "3" when the denominator is 1.
std::string format_rational(const Rational& value);

/// Conversion that throws ErrorCode::Overflow instead of truncating.
std::int64_t checked_int64(const BigInt& value);

}  // namespace aptri
