// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "aptri/core_geometry.hpp"
#include "aptri/integer_triangles.hpp"

using namespace aptri;

namespace {

ErrorCode params_error(int d, int kappa, int lambda) {
  try {
    TriangleParams::validate(BigInt(d), BigInt(kappa), BigInt(lambda));
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected aptri::Error");
  return ErrorCode::Internal;
}

std::array<BigInt, 3> triple(int a, int b, int c) {
  return {BigInt(a), BigInt(b), BigInt(c)};
}

std::set<std::array<BigInt, 3>> side_set(const std::vector<IntegerTriangle>& ts) {
  std::set<std::array<BigInt, 3>> out;
  for (const IntegerTriangle& t : ts) out.insert({t.alpha, t.beta, t.gamma});
  return out;
}

std::set<std::array<BigInt, 3>> side_set(
    const std::vector<std::array<BigInt, 3>>& ts) {
  return {ts.begin(), ts.end()};
}

}  // namespace

TEST_CASE("validate_params enforces all four conditions") {
  CHECK(params_error(1, 2, 1) == ErrorCode::Parity);
  CHECK(params_error(4, 1, 2) == ErrorCode::RatioCondition);  // lambda/kappa = 2
  CHECK_NOTHROW(TriangleParams::validate(4, 2, 1));
  CHECK(params_error(2, 2, 1) == ErrorCode::Parity);  // d must be 0 mod 4
  CHECK(params_error(1, 2, 4) == ErrorCode::NotCoprime);
  CHECK(params_error(0, 1, 1) == ErrorCode::NonPositive);
  CHECK(params_error(1, -1, 1) == ErrorCode::NonPositive);
  // boundary ratios lambda = kappa and lambda = 3 kappa are allowed
  CHECK_NOTHROW(TriangleParams::validate(1, 1, 1));
  CHECK_NOTHROW(TriangleParams::validate(1, 1, 3));
}

TEST_CASE("triangle_from_params on known parameter triples") {
  const IntegerTriangle t = triangle_from_params(TriangleParams::validate(4, 2, 1));
  CHECK(t.alpha == 8);
  CHECK(t.beta == 13);
  CHECK(t.gamma == 15);
  CHECK(t.rho == Rational(36, 13));
  CHECK(t.sin_a_coeff == Rational(4, 13));
  CHECK(t.a_deg == doctest::Approx(32.2042275).epsilon(1e-8));
  CHECK(t.phi_deg == doctest::Approx(27.7957725).epsilon(1e-8));
  CHECK(t.gamma_deg == doctest::Approx(87.7957725).epsilon(1e-8));

  const IntegerTriangle unit = triangle_from_params(TriangleParams::validate(1, 1, 1));
  CHECK(unit.alpha == 1);
  CHECK(unit.beta == 1);
  CHECK(unit.gamma == 1);
  CHECK(unit.rho == 3);
  CHECK(unit.sin_a_coeff == Rational(1, 2));
  CHECK(unit.a_deg == 60.0);
  CHECK(unit.phi_deg == 0.0);

  const IntegerTriangle t5 = triangle_from_params(TriangleParams::validate(1, 5, 1));
  CHECK(t5.alpha == 5);
  CHECK(t5.beta == 19);
  CHECK(t5.gamma == 21);
  CHECK(t5.sin_a_coeff == Rational(5, 38));
}

TEST_CASE("brute-force scan at small bounds") {
  CHECK(side_set(brute_force_triangles(2)) ==
        std::set<std::array<BigInt, 3>>{triple(1, 1, 1), triple(2, 2, 2)});

  std::set<std::array<BigInt, 3>> expected8;
  for (int k = 1; k <= 8; ++k) expected8.insert(triple(k, k, k));
  expected8.insert(triple(3, 7, 8));
  expected8.insert(triple(5, 7, 8));
  CHECK(side_set(brute_force_triangles(8)) == expected8);

  const auto upto15 = side_set(brute_force_triangles(15));
  CHECK(upto15.count(triple(7, 13, 15)) == 1);  // 49 + 225 - 105 = 169
  CHECK(upto15.count(triple(8, 13, 15)) == 1);  // 64 + 225 - 120 = 169
  CHECK_THROWS_AS(brute_force_triangles(0), Error);

  // the scan output is lexicographically sorted
  const auto rows = brute_force_triangles(15);
  for (size_t i = 1; i < rows.size(); ++i) CHECK(rows[i - 1] < rows[i]);
}

TEST_CASE("enumerate_triangles matches the scan oracle") {
  const auto single = enumerate_triangles(1);
  REQUIRE(single.size() == 1);
  CHECK(single[0].alpha == 1);

  CHECK(side_set(enumerate_triangles(8)) == side_set(brute_force_triangles(8)));
  for (int bound : {50, 200}) {
    CHECK(side_set(enumerate_triangles(bound)) ==
          side_set(brute_force_triangles(bound)));
  }

  const auto upto21 = side_set(enumerate_triangles(21));
  CHECK(upto21.count(triple(5, 19, 21)) == 1);
  CHECK(upto21.count(triple(16, 19, 21)) == 1);
}

TEST_CASE("enumerate_triangles keeps the smallest generating witness") {
  for (const IntegerTriangle& t : enumerate_triangles(15)) {
    if (t.alpha == 8 && t.beta == 13) {
      CHECK(t.params.d() == 4);
      CHECK(t.params.kappa() == 2);
      CHECK(t.params.lambda() == 1);
    }
    if (t.alpha == 3 && t.beta == 3) {
      // (d=1, kappa=1, lambda=3) beats (d=3, kappa=1, lambda=1)
      CHECK(t.params.d() == 1);
      CHECK(t.params.kappa() == 1);
      CHECK(t.params.lambda() == 3);
    }
  }
}

TEST_CASE("primitive_reduce divides out the side gcd") {
  const IntegerTriangle big = triangle_from_params(TriangleParams::validate(4, 4, 3));
  CHECK(big.alpha == 48);
  CHECK(big.beta == 57);
  CHECK(big.gamma == 63);
  CHECK(primitive_reduce(big) == triple(16, 19, 21));

  const IntegerTriangle prim = triangle_from_params(TriangleParams::validate(4, 2, 1));
  CHECK(primitive_reduce(prim) == triple(8, 13, 15));

  const IntegerTriangle eq = triangle_from_params(TriangleParams::validate(1, 1, 3));
  CHECK(eq.alpha == 3);
  CHECK(primitive_reduce(eq) == triple(1, 1, 1));

  // the reduced triple still satisfies the 60-degree relation
  const auto r = primitive_reduce(big);
  CHECK(r[1] * r[1] == r[0] * r[0] + r[2] * r[2] - r[0] * r[2]);
}

TEST_CASE("gcd_class_check on known parameter pairs") {
  CHECK(gcd_class_check(TriangleParams::validate(4, 4, 3)) == 3);
  CHECK(gcd_class_check(TriangleParams::validate(4, 2, 1)) == 1);
  CHECK(gcd_class_check(TriangleParams::validate(1, 1, 3)) == 3);
  CHECK(gcd_class_check(TriangleParams::validate(1, 3, 1)) == 1);
  CHECK(gcd_class_check(TriangleParams::validate(1, 5, 3)) == 3);
}

TEST_CASE("property: pairwise gcd is 3 iff 3 divides lambda (small sweep)") {
  for (int kappa = 1; kappa <= 30; ++kappa) {
    for (int lambda = 1; lambda <= 30; ++lambda) {
      if (boost::multiprecision::gcd(BigInt(kappa), BigInt(lambda)) != 1) continue;
      if (lambda > kappa && lambda < 3 * kappa) continue;
      const bool both_odd = kappa % 2 == 1 && lambda % 2 == 1;
      const TriangleParams p =
          TriangleParams::validate(both_odd ? 1 : 4, kappa, lambda);
      CHECK(gcd_class_check(p) == (lambda % 3 == 0 ? 3 : 1));
    }
  }
}

TEST_CASE("property: generated triangles satisfy every exact invariant") {
  for (const IntegerTriangle& t : enumerate_triangles(200)) {
    CHECK(t.beta * t.beta ==
          t.alpha * t.alpha + t.gamma * t.gamma - t.alpha * t.gamma);
    CHECK(t.alpha <= t.beta);
    CHECK(t.beta <= t.gamma);
    CHECK(t.alpha + t.beta > t.gamma);
    CHECK(t.rho > 2);
    CHECK(t.rho <= 3);
    CHECK(t.rho == Rational(t.alpha + t.beta + t.gamma) / t.beta);
    CHECK(t.sin_a_coeff > 0);
    CHECK(t.sin_a_coeff <= Rational(1, 2));

    const double sin_exact = to_double(t.sin_a_coeff) * std::numbers::sqrt3;
    CHECK(std::abs(std::sin(t.a_deg * kRadPerDeg) - sin_exact) <= 1e-12);
    CHECK(std::abs(t.a_deg + 60.0 + t.gamma_deg - 180.0) <= 1e-9);
    CHECK(std::abs(t.gamma_deg - (60.0 + t.phi_deg)) <= 1e-9);
    CHECK(t.a_deg <= 60.0);
    const bool equilateral = t.alpha == t.beta && t.beta == t.gamma;
    CHECK((t.a_deg == 60.0) == equilateral);
  }
}
