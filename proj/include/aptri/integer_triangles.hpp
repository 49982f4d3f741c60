// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <vector>

#include "aptri/numeric.hpp"

namespace aptri {

/// Validated parameters for the integer-triangle family
///   alpha = d k l,
///   beta  = d (3 k^2 + l^2) / 4,
///   gamma = d (2 k l + |3 k^2 - l^2|) / 4.
/// Requirements: d, k, l positive; gcd(k, l) = 1; l <= k or l >= 3 k
/// (the ordering condition alpha <= beta <= gamma); and when k + l is odd,
/// d must be a multiple of 4 so that beta and gamma are integers.
class TriangleParams {
 public:
  static TriangleParams validate(const BigInt& d, const BigInt& kappa,
                                 const BigInt& lambda);

  const BigInt& d() const noexcept { return d_; }
  const BigInt& kappa() const noexcept { return kappa_; }
  const BigInt& lambda() const noexcept { return lambda_; }

  bool operator==(const TriangleParams& o) const {
    return d_ == o.d_ && kappa_ == o.kappa_ && lambda_ == o.lambda_;
  }
  bool operator<(const TriangleParams& o) const {
    if (d_ != o.d_) return d_ < o.d_;
    if (kappa_ != o.kappa_) return kappa_ < o.kappa_;
    return lambda_ < o.lambda_;
  }

 private:
  TriangleParams(BigInt d, BigInt kappa, BigInt lambda)
      : d_(std::move(d)), kappa_(std::move(kappa)), lambda_(std::move(lambda)) {}
  BigInt d_, kappa_, lambda_;
};

/// Integer-sided triangle whose angles form an arithmetic progression, i.e.
/// beta^2 = alpha^2 + gamma^2 - alpha gamma exactly (the middle angle is 60
/// degrees). sin A is the exact rational multiple sin_a_coeff of sqrt(3);
/// phi_deg is the common difference of the angle progression.
struct IntegerTriangle {
  BigInt alpha;
  BigInt beta;
  BigInt gamma;
  TriangleParams params;   // one generating witness
  Rational rho;            // perimeter / beta, exact, in (2, 3]
  Rational sin_a_coeff;    // sin A = sin_a_coeff * sqrt(3), lowest terms
  double a_deg;
  double phi_deg;
  double gamma_deg;
};

IntegerTriangle triangle_from_params(const TriangleParams& p);

/// Scan oracle: every triple 1 <= alpha <= beta <= gamma <= max_gamma with
/// beta^2 = alpha^2 + gamma^2 - alpha gamma, by testing 4 beta^2 - 3 alpha^2
/// for a perfect square of the right parity. Lexicographically sorted.
std::vector<std::array<BigInt, 3>> brute_force_triangles(const BigInt& max_gamma);

/// Parametric sweep covering every triple of the scan oracle exactly once,
/// each with its lexicographically smallest (d, kappa, lambda) witness.
/// Sorted by side triple.
std::vector<IntegerTriangle> enumerate_triangles(const BigInt& max_gamma);

/// Sides divided by their gcd.
std::array<BigInt, 3> primitive_reduce(const IntegerTriangle& t);

/// Common pairwise gcd of the three scaled sides i*kl, i*(3k^2+l^2)/4,
/// i*(2kl+|3k^2-l^2|)/4, where i = 1 for k, l both odd and i = 4 otherwise.
/// The three pairwise gcds always coincide (Internal error if not); the
/// returned value is 3 exactly when 3 divides lambda, which the test suite
/// verifies exhaustively.
BigInt gcd_class_check(const TriangleParams& p);

}  // namespace aptri
