// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <set>

#include "aptri/numeric.hpp"

namespace aptri {

/// Positive integer solution of x^2 + 3 y^2 = z^2.
struct DioSolution {
  BigInt x;
  BigInt y;
  BigInt z;

  bool operator==(const DioSolution& o) const {
    return x == o.x && y == o.y && z == o.z;
  }
  bool operator<(const DioSolution& o) const {
    if (x != o.x) return x < o.x;
    if (y != o.y) return y < o.y;
    return z < o.z;
  }
};

/// Validated parameter triple for the solution family
///   x = d |3 k^2 - l^2| / 2,  y = d k l,  z = d (3 k^2 + l^2) / 2.
/// Requires d, k, l positive, gcd(k, l) = 1, and integrality of the halved
/// expressions: d even, or k and l both odd (ParityViolation otherwise).
class DioParams {
 public:
  static DioParams validate(const BigInt& d, const BigInt& kappa,
                            const BigInt& lambda);

  const BigInt& d() const noexcept { return d_; }
  const BigInt& kappa() const noexcept { return kappa_; }
  const BigInt& lambda() const noexcept { return lambda_; }

 private:
  DioParams(BigInt d, BigInt kappa, BigInt lambda)
      : d_(std::move(d)), kappa_(std::move(kappa)), lambda_(std::move(lambda)) {}
  BigInt d_, kappa_, lambda_;
};

DioSolution solution_from_params(const DioParams& p);

/// True iff x, y, z > 0 and x^2 + 3 y^2 = z^2 exactly.
bool is_solution(const BigInt& x, const BigInt& y, const BigInt& z);

/// Exhaustive scan oracle: all solutions with z <= z_max, found by iterating
/// (y, z) and testing z^2 - 3 y^2 for a perfect square. Requires z_max >= 2.
std::set<DioSolution> brute_force_solutions(const BigInt& z_max);

/// All solutions with z <= z_max reachable through the parameter family,
/// deduplicated by value triple. Parameter bounds follow from
/// 3 k^2 + l^2 <= 2 z_max; completeness is checked against the scan oracle
/// in the test suite.
std::set<DioSolution> enumerate_via_params(const BigInt& z_max);

}  // namespace aptri
