// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <utility>

#include "aptri/core_geometry.hpp"

namespace aptri {

/// A triangle built from (beta, rho), rho = perimeter / middle side.
/// Sides are floating point; when the construction happens to be rational
/// (the discriminant (3-rho)(1+rho)/3 is a rational square) the exact sides
/// are carried along as well.
struct Construction {
  double alpha;
  double beta;
  double gamma;
  double sin_a;
  double sin_gamma;
  Angles angles;  // angles.b_deg is 60 up to rounding, by construction
  std::optional<Sides> exact_sides;
};

/// Unique triangle with middle side beta whose angles form an arithmetic
/// progression, for 2 < rho <= 3:
///   alpha = beta/2 [rho - 1 - sqrt((3-rho)(1+rho)/3)]
///   gamma = beta/2 [rho - 1 + sqrt((3-rho)(1+rho)/3)]
/// Throws RhoOutOfRange outside the window (the bound rho = 2 excluded),
/// NonPositiveSide for beta <= 0.
Construction construct_from_rho(const Rational& beta, const Rational& rho);
Construction construct_from_rho(const Rational& beta, double rho);

/// sin A and sin Gamma of the construction above, without building sides.
std::pair<double, double> sines_from_rho(const Rational& rho);
std::pair<double, double> sines_from_rho(double rho);

/// Perimeter divided by the middle side; exact on exact sides.
Rational rho_of(const Sides& s);
double rho_of(double alpha, double beta, double gamma);

}  // namespace aptri
