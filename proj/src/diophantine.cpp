// SPDX-License-Identifier: Apache-2.0
#include "aptri/diophantine.hpp"

namespace aptri {

namespace mp = boost::multiprecision;

DioParams DioParams::validate(const BigInt& d, const BigInt& kappa,
                              const BigInt& lambda) {
  if (d <= 0 || kappa <= 0 || lambda <= 0)
    fail(ErrorCode::NonPositive, "d, kappa, lambda must all be positive");
  if (mp::gcd(kappa, lambda) != 1)
    fail(ErrorCode::NotCoprime,
         "kappa = " + kappa.str() + " and lambda = " + lambda.str() +
             " are not coprime");
  const bool both_odd = mp::bit_test(kappa, 0) && mp::bit_test(lambda, 0);
  if (!both_odd && mp::bit_test(d, 0))
    fail(ErrorCode::Parity,
         "mixed-parity kappa, lambda require even d, got d = " + d.str());
  return DioParams(d, kappa, lambda);
}

DioSolution solution_from_params(const DioParams& p) {
  const BigInt k2 = p.kappa() * p.kappa();
  const BigInt l2 = p.lambda() * p.lambda();
  const BigInt x2 = p.d() * abs(3 * k2 - l2);  // twice x; even by validation
  const BigInt z2 = p.d() * (3 * k2 + l2);
  if (mp::bit_test(x2, 0) || mp::bit_test(z2, 0))
    fail(ErrorCode::Internal, "parity invariant broken in solution_from_params");
  return DioSolution{x2 / 2, p.d() * p.kappa() * p.lambda(), z2 / 2};
}

bool is_solution(const BigInt& x, const BigInt& y, const BigInt& z) {
  if (x <= 0 || y <= 0 || z <= 0) return false;
  return x * x + 3 * y * y == z * z;
}

std::set<DioSolution> brute_force_solutions(const BigInt& z_max) {
  if (z_max < 2) fail(ErrorCode::BadArgument, "z_max must be at least 2");
  std::set<DioSolution> out;
  for (BigInt z = 2; z <= z_max; ++z) {
    const BigInt zz = z * z;
    for (BigInt y = 1; 3 * y * y < zz; ++y) {
      const BigInt rest = zz - 3 * y * y;
      BigInt x;
      if (is_perfect_square(rest, &x) && x >= 1)
        out.insert(DioSolution{x, y, z});
    }
  }
  return out;
}

std::set<DioSolution> enumerate_via_params(const BigInt& z_max) {
  if (z_max < 2) fail(ErrorCode::BadArgument, "z_max must be at least 2");
  std::set<DioSolution> out;
  const BigInt bound = 2 * z_max;  // d (3k^2 + l^2) <= 2 z_max with d >= 1
  for (BigInt kappa = 1; 3 * kappa * kappa + 1 <= bound; ++kappa) {
    const BigInt k2 = 3 * kappa * kappa;
    for (BigInt lambda = 1; k2 + lambda * lambda <= bound; ++lambda) {
      if (mp::gcd(kappa, lambda) != 1) continue;
      const BigInt m = k2 + lambda * lambda;
      const bool both_odd = mp::bit_test(kappa, 0) && mp::bit_test(lambda, 0);
      const BigInt step = both_odd ? 1 : 2;
      for (BigInt d = step; d * m <= bound; d += step) {
        out.insert(solution_from_params(DioParams::validate(d, kappa, lambda)));
      }
    }
  }
  return out;
}

}  // namespace aptri
