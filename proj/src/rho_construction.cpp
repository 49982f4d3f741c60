// SPDX-License-Identifier: Apache-2.0
#include "aptri/rho_construction.hpp"

#include <cmath>
#include <string>

namespace aptri {

namespace {

[[noreturn]] void rho_out_of_range(const std::string& value) {
  fail(ErrorCode::RhoOutOfRange,
       "rho must satisfy 2 < rho <= 3, got " + value);
}

double angle_from_deficits(double tau, double opp, double o1, double o2) {
  return 2.0 * std::atan2(std::sqrt(o1 * o2), std::sqrt(tau * opp)) * kDegPerRad;
}

// Shared floating-point tail. quad = 4 rho (rho - 2) / 3 is passed in,
// exact for rational rho; root = sqrt((3-rho)(1+rho)/3). The sum
// rho - 1 + root has no cancellation anywhere on the window, so alpha is
// evaluated through quad / (rho - 1 + root) instead of the raw difference
// rho - 1 - root, which collapses as rho -> 2.
Construction build(double beta_d, double rho_d, double quad, double root,
                   std::optional<Sides> exact_sides) {
  const double big = rho_d - 1.0 + root;
  const double alpha = beta_d * quad / (2.0 * big);
  const double gamma = beta_d * big / 2.0;

  const double sin_a = std::numbers::sqrt3 / 4.0 * quad / big;
  const double sin_gamma = std::numbers::sqrt3 / 4.0 * big;

  // deficits tau - x, each in a cancellation-free form
  const double tau = beta_d * rho_d / 2.0;
  const double def_a = beta_d * (1.0 + root) / 2.0;
  const double def_b = beta_d * (rho_d - 2.0) / 2.0;
  const double def_g = beta_d * (rho_d * (rho_d - 2.0) / 3.0) / (2.0 * (1.0 + root));

  const Angles angles{
      angle_from_deficits(tau, def_a, def_b, def_g),
      angle_from_deficits(tau, def_b, def_a, def_g),
      angle_from_deficits(tau, def_g, def_a, def_b),
  };
  return Construction{alpha,     beta_d, gamma, sin_a, sin_gamma, angles,
                      std::move(exact_sides)};
}

}  // namespace

Construction construct_from_rho(const Rational& beta, const Rational& rho) {
  if (beta <= 0)
    fail(ErrorCode::NonPositiveSide, "beta must be positive, got " + format_rational(beta));
  if (rho <= 2 || rho > 3) rho_out_of_range(format_rational(rho));

  const Rational disc = (3 - rho) * (1 + rho) / 3;
  const Rational quad = 4 * rho * (rho - 2) / 3;

  std::optional<Sides> exact;
  if (auto root = sqrt_exact(disc)) {
    const Rational alpha = beta * (rho - 1 - *root) / 2;
    const Rational gamma = beta * (rho - 1 + *root) / 2;
    exact = Sides::validate(alpha, beta, gamma);
  }

  return build(to_double(beta), to_double(rho), to_double(quad),
               std::sqrt(to_double(disc)), std::move(exact));
}

Construction construct_from_rho(const Rational& beta, double rho) {
  if (beta <= 0)
    fail(ErrorCode::NonPositiveSide, "beta must be positive, got " + format_rational(beta));
  if (!(rho > 2.0 && rho <= 3.0)) rho_out_of_range(std::to_string(rho));

  const double disc = (3.0 - rho) * (1.0 + rho) / 3.0;
  const double quad = 4.0 * rho * (rho - 2.0) / 3.0;
  return build(to_double(beta), rho, quad, std::sqrt(std::max(disc, 0.0)),
               std::nullopt);
}

std::pair<double, double> sines_from_rho(const Rational& rho) {
  if (rho <= 2 || rho > 3) rho_out_of_range(format_rational(rho));
  const double root = std::sqrt(to_double(Rational((3 - rho) * (1 + rho) / 3)));
  const double quad = to_double(Rational(4 * rho * (rho - 2) / 3));
  const double big = to_double(rho) - 1.0 + root;
  return {std::numbers::sqrt3 / 4.0 * quad / big,
          std::numbers::sqrt3 / 4.0 * big};
}

std::pair<double, double> sines_from_rho(double rho) {
  if (!(rho > 2.0 && rho <= 3.0)) rho_out_of_range(std::to_string(rho));
  const double root = std::sqrt(std::max((3.0 - rho) * (1.0 + rho) / 3.0, 0.0));
  const double quad = 4.0 * rho * (rho - 2.0) / 3.0;
  const double big = rho - 1.0 + root;
  return {std::numbers::sqrt3 / 4.0 * quad / big,
          std::numbers::sqrt3 / 4.0 * big};
}

Rational rho_of(const Sides& s) {
  return Rational(s.a() + s.b() + s.c()) / s.b();
}

double rho_of(double alpha, double beta, double gamma) {
  return (alpha + beta + gamma) / beta;
}

}  // namespace aptri
