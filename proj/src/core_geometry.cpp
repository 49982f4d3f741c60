// SPDX-License-Identifier: Apache-2.0
#include "aptri/core_geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace aptri {

Sides Sides::validate(const Rational& a, const Rational& b, const Rational& c) {
  const Rational lo = std::min({a, b, c});
  if (lo <= 0)
    fail(ErrorCode::NonPositiveSide,
         "sides must be positive, got (" + format_rational(a) + ", " +
             format_rational(b) + ", " + format_rational(c) + ")");
  std::array<Rational, 3> v{a, b, c};
  std::sort(v.begin(), v.end());
  if (v[0] + v[1] <= v[2])
    fail(ErrorCode::TriangleInequality,
         "degenerate triangle: " + format_rational(v[0]) + " + " +
             format_rational(v[1]) + " <= " + format_rational(v[2]));
  return Sides(std::move(v[0]), std::move(v[1]), std::move(v[2]));
}

Rational semiperimeter(const Sides& s) {
  return Rational(s.a() + s.b() + s.c()) / 2;
}

double inradius(const Sides& s) {
  const Rational tau = semiperimeter(s);
  const Rational radicand =
      (tau - s.a()) * (tau - s.b()) * (tau - s.c()) / tau;
  return std::sqrt(to_double(radicand));
}

namespace {

double angle_deg(const Rational& tau, const Rational& opposite_deficit,
                 const Rational& other1, const Rational& other2) {
  const Rational tan_half_sq = (other1 * other2) / (tau * opposite_deficit);
  return 2.0 * std::atan(std::sqrt(to_double(tan_half_sq))) * kDegPerRad;
}

}  // namespace

Angles angles_from_sides(const Sides& s) {
  const Rational tau = semiperimeter(s);
  const Rational ta = tau - s.a();
  const Rational tb = tau - s.b();
  const Rational tc = tau - s.c();
  return Angles{
      angle_deg(tau, ta, tb, tc),
      angle_deg(tau, tb, ta, tc),
      angle_deg(tau, tc, ta, tb),
  };
}

double half_angle_tan(const Sides& s, Vertex vertex) {
  const Rational tau = semiperimeter(s);
  const Rational* opposite = nullptr;
  switch (vertex) {
    case Vertex::A: opposite = &s.a(); break;
    case Vertex::B: opposite = &s.b(); break;
    case Vertex::Gamma: opposite = &s.c(); break;
  }
  return inradius(s) / to_double(Rational(tau - *opposite));
}

Triangle make_triangle(const Sides& s) {
  return Triangle{s, semiperimeter(s), angles_from_sides(s), inradius(s)};
}

}  // namespace aptri
