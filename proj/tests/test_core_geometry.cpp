// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <random>

#include "aptri/core_geometry.hpp"
#include "support/samplers.hpp"

using namespace aptri;

namespace {

ErrorCode sides_error(int a, int b, int c) {
  try {
    Sides::validate(Rational(a), Rational(b), Rational(c));
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected aptri::Error");
  return ErrorCode::Internal;
}

double rel_diff(double u, double v) {
  return std::abs(u - v) / std::max(std::abs(u), std::abs(v));
}

}  // namespace

TEST_CASE("validate_sides sorts and enforces the triangle inequalities") {
  const Sides s = Sides::validate(Rational(8), Rational(15), Rational(13));
  CHECK(s.a() == 8);
  CHECK(s.b() == 13);
  CHECK(s.c() == 15);

  CHECK(Sides::validate(Rational(3), Rational(4), Rational(5)).c() == 5);
  CHECK(sides_error(1, 1, 2) == ErrorCode::TriangleInequality);
  CHECK(sides_error(0, 1, 1) == ErrorCode::NonPositiveSide);
  CHECK(sides_error(-3, 4, 5) == ErrorCode::NonPositiveSide);
  CHECK(sides_error(1, 2, 5) == ErrorCode::TriangleInequality);
}

TEST_CASE("semiperimeter is exact") {
  CHECK(semiperimeter(Sides::validate(1, 1, 1)) == Rational(3, 2));
  CHECK(semiperimeter(Sides::validate(3, 4, 5)) == 6);
  CHECK(semiperimeter(Sides::validate(8, 13, 15)) == 18);
  CHECK(semiperimeter(Sides::validate(Rational(1, 3), Rational(1, 3),
                                      Rational(1, 2))) == Rational(7, 12));
}

TEST_CASE("inradius matches direct evaluation") {
  CHECK(inradius(Sides::validate(3, 4, 5)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(inradius(Sides::validate(1, 1, 1)) ==
        doctest::Approx(1.0 / (2.0 * std::sqrt(3.0))).epsilon(1e-12));
  // sqrt((18-8)(18-13)(18-15)/18) = sqrt(25/3)
  CHECK(inradius(Sides::validate(8, 13, 15)) ==
        doctest::Approx(5.0 / std::sqrt(3.0)).epsilon(1e-12));
}

TEST_CASE("angles_from_sides on known triangles") {
  const Angles eq = angles_from_sides(Sides::validate(1, 1, 1));
  CHECK(eq.a_deg == doctest::Approx(60.0).epsilon(1e-12));
  CHECK(eq.b_deg == doctest::Approx(60.0).epsilon(1e-12));
  CHECK(eq.gamma_deg == doctest::Approx(60.0).epsilon(1e-12));

  const Angles right = angles_from_sides(Sides::validate(3, 4, 5));
  CHECK(right.a_deg ==
        doctest::Approx(std::asin(3.0 / 5.0) * kDegPerRad).epsilon(1e-12));
  CHECK(right.b_deg ==
        doctest::Approx(std::asin(4.0 / 5.0) * kDegPerRad).epsilon(1e-12));
  CHECK(right.gamma_deg == doctest::Approx(90.0).epsilon(1e-12));

  const Angles t = angles_from_sides(Sides::validate(8, 13, 15));
  CHECK(t.a_deg == doctest::Approx(32.2042275).epsilon(1e-8));
  CHECK(t.b_deg == doctest::Approx(60.0).epsilon(1e-12));
  CHECK(t.gamma_deg == doctest::Approx(87.7957725).epsilon(1e-8));
}

TEST_CASE("half_angle_tan at each vertex") {
  const Sides s = Sides::validate(3, 4, 5);
  CHECK(half_angle_tan(s, Vertex::Gamma) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(half_angle_tan(s, Vertex::A) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(half_angle_tan(Sides::validate(1, 1, 1), Vertex::B) ==
        doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));
}

TEST_CASE("make_triangle bundles the derived quantities") {
  const Triangle t = make_triangle(Sides::validate(8, 13, 15));
  CHECK(t.tau == 18);
  CHECK(t.inradius == doctest::Approx(5.0 / std::sqrt(3.0)).epsilon(1e-12));
  CHECK(t.angles.b_deg == doctest::Approx(60.0).epsilon(1e-12));
}

TEST_CASE("property: half-angle and heron inradius routes agree") {
  std::mt19937_64 rng(20260801);
  for (int i = 0; i < 2000; ++i) {
    const Sides s = aptri_test::random_sides(rng);
    const Rational tau = semiperimeter(s);
    const Angles ang = angles_from_sides(s);
    const double r = inradius(s);
    const double e1 =
        to_double(Rational(tau - s.a())) * std::tan(ang.a_deg * kRadPerDeg / 2);
    const double e2 =
        to_double(Rational(tau - s.b())) * std::tan(ang.b_deg * kRadPerDeg / 2);
    const double e3 = to_double(Rational(tau - s.c())) *
                      std::tan(ang.gamma_deg * kRadPerDeg / 2);
    CHECK(rel_diff(e1, r) <= 1e-10);
    CHECK(rel_diff(e2, r) <= 1e-10);
    CHECK(rel_diff(e3, r) <= 1e-10);
    CHECK(rel_diff(e1, e2) <= 1e-10);
    CHECK(rel_diff(e2, e3) <= 1e-10);
  }
}

TEST_CASE("property: law-of-cosines round trip recovers each side") {
  std::mt19937_64 rng(20260802);
  for (int i = 0; i < 2000; ++i) {
    const Sides s = aptri_test::random_sides(rng);
    const Angles ang = angles_from_sides(s);
    const double a = to_double(s.a());
    const double b = to_double(s.b());
    const double c = to_double(s.c());
    const double a2 = std::sqrt(b * b + c * c -
                                2 * b * c * std::cos(ang.a_deg * kRadPerDeg));
    const double b2 = std::sqrt(a * a + c * c -
                                2 * a * c * std::cos(ang.b_deg * kRadPerDeg));
    const double c2 = std::sqrt(a * a + b * b -
                                2 * a * b * std::cos(ang.gamma_deg * kRadPerDeg));
    CHECK(rel_diff(a, a2) <= 1e-9);
    CHECK(rel_diff(b, b2) <= 1e-9);
    CHECK(rel_diff(c, c2) <= 1e-9);
  }
}

TEST_CASE("property: angles are scale invariant, sorted, and sum to 180") {
  std::mt19937_64 rng(20260803);
  for (int i = 0; i < 1000; ++i) {
    const Sides s = aptri_test::random_sides(rng);
    const Rational k = aptri_test::random_rational(rng, 100, 7);
    const Sides scaled = Sides::validate(Rational(k * s.a()), Rational(k * s.b()),
                                         Rational(k * s.c()));
    const Angles u = angles_from_sides(s);
    const Angles v = angles_from_sides(scaled);
    CHECK(std::abs(u.a_deg - v.a_deg) <= 1e-12 * u.a_deg);
    CHECK(std::abs(u.b_deg - v.b_deg) <= 1e-12 * u.b_deg);
    CHECK(std::abs(u.gamma_deg - v.gamma_deg) <= 1e-12 * u.gamma_deg);

    CHECK(u.a_deg > 0);
    CHECK(u.a_deg <= u.b_deg);
    CHECK(u.b_deg <= u.gamma_deg);
    CHECK(u.gamma_deg < 180);
    CHECK(std::abs(u.a_deg + u.b_deg + u.gamma_deg - 180.0) <= 1e-9);
  }
}
