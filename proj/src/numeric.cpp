// SPDX-License-Identifier: Apache-2.0
#include "aptri/numeric.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>

namespace aptri {

namespace mp = boost::multiprecision;

double to_double(const BigInt& value) {
  return value.convert_to<double>();
}

double to_double(const Rational& value) {
  BigInt num = mp::numerator(value);
  const BigInt& den = mp::denominator(value);
  if (num == 0) return 0.0;
  const bool negative = num < 0;
  if (negative) num = -num;

  BigInt n = num;
  BigInt d = den;
  const long nb = static_cast<long>(mp::msb(n));
  const long db = static_cast<long>(mp::msb(d));
  // Keep both operands inside double range; bits far below the 53-bit
  // mantissa of the quotient cannot affect the result.
  constexpr long kMaxBits = 960;
  if (nb > kMaxBits || db > kMaxBits) {
    const long shift = std::max(nb, db) - kMaxBits;
    n >>= shift;
    d >>= shift;
    if (d == 0) return negative ? -HUGE_VAL : HUGE_VAL;
    if (n == 0) return negative ? -0.0 : 0.0;
  }
  const double q = n.convert_to<double>() / d.convert_to<double>();
  return negative ? -q : q;
}

BigInt isqrt(const BigInt& n) {
  if (n < 0) fail(ErrorCode::BadArgument, "isqrt of negative value");
  return mp::sqrt(n);
}

bool is_perfect_square(const BigInt& n, BigInt* root) {
  if (n < 0) return false;
  BigInt r = mp::sqrt(n);
  if (r * r != n) return false;
  if (root != nullptr) *root = r;
  return true;
}

std::optional<Rational> sqrt_exact(const Rational& value) {
  if (value < 0) return std::nullopt;
  // cpp_rational keeps numerator/denominator coprime, so the value is a
  // rational square iff both parts are integer squares.
  BigInt rn, rd;
  if (!is_perfect_square(mp::numerator(value), &rn)) return std::nullopt;
  if (!is_perfect_square(mp::denominator(value), &rd)) return std::nullopt;
  return Rational(rn, rd);
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char ch) { return std::isdigit(ch) != 0; });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  const std::string original(text);
  if (s.empty()) fail(ErrorCode::Parse, "empty number");

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  Rational magnitude;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      fail(ErrorCode::Parse, "not a rational number: '" + original + "'");
    BigInt d{std::string(den)};
    if (d == 0) fail(ErrorCode::Parse, "zero denominator: '" + original + "'");
    magnitude = Rational(BigInt{std::string(num)}, d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty())
      fail(ErrorCode::Parse, "not a number: '" + original + "'");
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)))
      fail(ErrorCode::Parse, "not a number: '" + original + "'");
    BigInt w = whole.empty() ? BigInt(0) : BigInt{std::string(whole)};
    BigInt scale = 1;
    BigInt f = 0;
    if (!frac.empty()) {
      f = BigInt{std::string(frac)};
      for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    }
    magnitude = Rational(w * scale + f, scale);
  } else {
    if (!all_digits(s)) fail(ErrorCode::Parse, "not a number: '" + original + "'");
    magnitude = Rational(BigInt{std::string(s)});
  }
  return negative ? Rational(-magnitude) : magnitude;
}

std::string format_rational(const Rational& value) {
  const BigInt num = mp::numerator(value);
  const BigInt den = mp::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::int64_t checked_int64(const BigInt& value) {
  static const BigInt kMin = std::numeric_limits<std::int64_t>::min();
  static const BigInt kMax = std::numeric_limits<std::int64_t>::max();
  if (value < kMin || value > kMax)
    fail(ErrorCode::Overflow, "value does not fit in 64 bits: " + value.str());
  return value.convert_to<std::int64_t>();
}

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPositiveSide: return "non_positive_side";
    case ErrorCode::TriangleInequality: return "triangle_inequality_violation";
    case ErrorCode::ZeroOperand: return "zero_operand";
    case ErrorCode::RhoOutOfRange: return "rho_out_of_range";
    case ErrorCode::NotCoprime: return "not_coprime";
    case ErrorCode::RatioCondition: return "ratio_condition_violation";
    case ErrorCode::Parity: return "parity_violation";
    case ErrorCode::NonPositive: return "non_positive";
    case ErrorCode::Parse: return "parse_error";
    case ErrorCode::Overflow: return "overflow";
    case ErrorCode::BadArgument: return "bad_argument";
    case ErrorCode::Internal: return "internal_error";
  }
  return "unknown";
}

}  // namespace aptri
