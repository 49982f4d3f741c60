// SPDX-License-Identifier: Apache-2.0
#include "aptri/integer_triangles.hpp"

#include "aptri/core_geometry.hpp"

#include <cmath>
#include <map>
#include <numbers>

namespace aptri {

namespace mp = boost::multiprecision;

TriangleParams TriangleParams::validate(const BigInt& d, const BigInt& kappa,
                                        const BigInt& lambda) {
  if (d <= 0 || kappa <= 0 || lambda <= 0)
    fail(ErrorCode::NonPositive, "d, kappa, lambda must all be positive");
  if (mp::gcd(kappa, lambda) != 1)
    fail(ErrorCode::NotCoprime,
         "kappa = " + kappa.str() + " and lambda = " + lambda.str() +
             " are not coprime");
  if (lambda > kappa && lambda < 3 * kappa)
    fail(ErrorCode::RatioCondition,
         "lambda/kappa must lie outside (1, 3): lambda = " + lambda.str() +
             ", kappa = " + kappa.str());
  const bool both_odd = mp::bit_test(kappa, 0) && mp::bit_test(lambda, 0);
  if (!both_odd && (d & 3) != 0)
    fail(ErrorCode::Parity,
         "mixed-parity kappa, lambda require d divisible by 4, got d = " +
             d.str());
  return TriangleParams(d, kappa, lambda);
}

namespace {

struct RawTriple {
  BigInt alpha, beta, gamma;
};

RawTriple sides_from(const BigInt& d, const BigInt& kappa, const BigInt& lambda) {
  const BigInt k2 = 3 * kappa * kappa;
  const BigInt l2 = lambda * lambda;
  const BigInt beta4 = d * (k2 + l2);
  const BigInt gamma4 = d * (2 * kappa * lambda + abs(k2 - l2));
  if ((beta4 & 3) != 0 || (gamma4 & 3) != 0)
    fail(ErrorCode::Internal, "non-integer side in parametric triangle");
  return RawTriple{d * kappa * lambda, beta4 / 4, gamma4 / 4};
}

double a_deg_from_coeff(const Rational& coeff) {
  // coeff = 1/2 is the equilateral family; pin the angle exactly
  if (coeff == Rational(1, 2)) return 60.0;
  return std::asin(to_double(coeff) * std::numbers::sqrt3) * kDegPerRad;
}

}  // namespace

IntegerTriangle triangle_from_params(const TriangleParams& p) {
  RawTriple t = sides_from(p.d(), p.kappa(), p.lambda());
  if (!(t.alpha <= t.beta && t.beta <= t.gamma))
    fail(ErrorCode::Internal, "parametric sides not ordered");
  if (t.beta * t.beta != t.alpha * t.alpha + t.gamma * t.gamma - t.alpha * t.gamma)
    fail(ErrorCode::Internal, "parametric sides break the 60-degree relation");
  if (t.alpha + t.beta <= t.gamma)
    fail(ErrorCode::Internal, "parametric sides break the triangle inequality");

  const Rational rho = Rational(t.alpha + t.beta + t.gamma) / t.beta;
  if (!(rho > 2 && rho <= 3))
    fail(ErrorCode::Internal, "rho outside (2, 3]: " + format_rational(rho));

  const Rational coeff(2 * p.kappa() * p.lambda(),
                       3 * p.kappa() * p.kappa() + p.lambda() * p.lambda());
  const double a_deg = a_deg_from_coeff(coeff);
  return IntegerTriangle{std::move(t.alpha), std::move(t.beta),
                         std::move(t.gamma), p,     rho,
                         coeff,              a_deg, 60.0 - a_deg,
                         120.0 - a_deg};
}

std::vector<std::array<BigInt, 3>> brute_force_triangles(const BigInt& max_gamma) {
  if (max_gamma < 1) fail(ErrorCode::BadArgument, "max_gamma must be at least 1");
  std::vector<std::array<BigInt, 3>> out;
  for (BigInt alpha = 1; alpha <= max_gamma; ++alpha) {
    const BigInt a3 = 3 * alpha * alpha;
    for (BigInt beta = alpha; beta <= max_gamma; ++beta) {
      const BigInt disc = 4 * beta * beta - a3;
      BigInt delta;
      if (!is_perfect_square(disc, &delta)) continue;
      // gamma = (alpha + delta) / 2 must be an integer
      if (mp::bit_test(alpha + delta, 0)) continue;
      BigInt gamma = (alpha + delta) / 2;
      if (gamma > max_gamma) continue;
      out.push_back({alpha, beta, std::move(gamma)});
    }
  }
  return out;  // (alpha, beta) loop order is already lexicographic
}

std::vector<IntegerTriangle> enumerate_triangles(const BigInt& max_gamma) {
  if (max_gamma < 1) fail(ErrorCode::BadArgument, "max_gamma must be at least 1");

  // smallest witness per side triple, ordered by (d, kappa, lambda)
  std::map<std::array<BigInt, 3>, TriangleParams> witnesses;
  const BigInt bound = 4 * max_gamma;  // beta = d (3k^2 + l^2) / 4 <= gamma

  for (BigInt kappa = 1; 3 * kappa * kappa + 1 <= bound; ++kappa) {
    const BigInt k2 = 3 * kappa * kappa;
    for (BigInt lambda = 1; k2 + lambda * lambda <= bound; ++lambda) {
      if (mp::gcd(kappa, lambda) != 1) continue;
      if (lambda > kappa && lambda < 3 * kappa) continue;
      const bool both_odd = mp::bit_test(kappa, 0) && mp::bit_test(lambda, 0);
      const BigInt step = both_odd ? 1 : 4;
      for (BigInt d = step;; d += step) {
        RawTriple t = sides_from(d, kappa, lambda);
        if (t.gamma > max_gamma) break;
        std::array<BigInt, 3> key{t.alpha, t.beta, t.gamma};
        TriangleParams params = TriangleParams::validate(d, kappa, lambda);
        auto [it, inserted] = witnesses.emplace(std::move(key), params);
        if (!inserted && params < it->second) it->second = params;
      }
    }
  }

  std::vector<IntegerTriangle> out;
  out.reserve(witnesses.size());
  for (const auto& [sides, params] : witnesses)
    out.push_back(triangle_from_params(params));
  return out;  // std::map iteration is lexicographic in the side triple
}

std::array<BigInt, 3> primitive_reduce(const IntegerTriangle& t) {
  const BigInt g = mp::gcd(mp::gcd(t.alpha, t.beta), t.gamma);
  return {t.alpha / g, t.beta / g, t.gamma / g};
}

BigInt gcd_class_check(const TriangleParams& p) {
  const bool both_odd = mp::bit_test(p.kappa(), 0) && mp::bit_test(p.lambda(), 0);
  const BigInt i = both_odd ? 1 : 4;
  RawTriple t = sides_from(i, p.kappa(), p.lambda());
  const BigInt g1 = mp::gcd(t.alpha, t.beta);
  const BigInt g2 = mp::gcd(t.beta, t.gamma);
  const BigInt g3 = mp::gcd(t.alpha, t.gamma);
  if (g1 != g2 || g2 != g3)
    fail(ErrorCode::Internal,
         "pairwise gcds differ for kappa = " + p.kappa().str() +
             ", lambda = " + p.lambda().str());
  return g1;
}

}  // namespace aptri
