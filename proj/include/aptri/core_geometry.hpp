// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <numbers>

#include "aptri/numeric.hpp"

namespace aptri {

inline constexpr double kDegPerRad = 180.0 / std::numbers::pi;
inline constexpr double kRadPerDeg = std::numbers::pi / 180.0;

/// Triangle side lengths as exact positive rationals, stored sorted so that
/// a() <= b() <= c(). Construction rejects non-positive lengths and
/// degenerate triples (a + b <= c after sorting).
class Sides {
 public:
  static Sides validate(const Rational& a, const Rational& b, const Rational& c);

  const Rational& a() const noexcept { return a_; }
  const Rational& b() const noexcept { return b_; }
  const Rational& c() const noexcept { return c_; }

  bool operator==(const Sides& other) const = default;

 private:
  Sides(Rational a, Rational b, Rational c)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {}

  Rational a_, b_, c_;
};

enum class Vertex { A, B, Gamma };

/// Interior angles in degrees, ascending; b_deg is opposite the middle side.
struct Angles {
  double a_deg;
  double b_deg;
  double gamma_deg;
};

struct Triangle {
  Sides sides;
  Rational tau;  // semiperimeter, exact
  Angles angles;
  double inradius;
};

/// Exact semiperimeter (a + b + c) / 2.
Rational semiperimeter(const Sides& s);

/// Radius of the inscribed circle, sqrt((tau-a)(tau-b)(tau-c)/tau).
/// The radicand is computed exactly; one floating square root follows.
double inradius(const Sides& s);

/// All three interior angles. Each angle X is evaluated through the exact
/// rational tan^2(X/2) = (tau-y)(tau-z) / (tau (tau-x)), which keeps the
/// computation stable for thin triangles and exactly scale-invariant.
Angles angles_from_sides(const Sides& s);

/// tan(X/2) at the given vertex, as inradius / (tau - opposite side).
double half_angle_tan(const Sides& s, Vertex vertex);

Triangle make_triangle(const Sides& s);

}  // namespace aptri
