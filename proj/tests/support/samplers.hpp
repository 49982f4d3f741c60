// SPDX-License-Identifier: Apache-2.0
#pragma once

// Test-only deterministic generators.

#include <algorithm>
#include <array>
#include <random>

#include "aptri/core_geometry.hpp"

namespace aptri_test {

// Small numerators/denominators keep the exact progression residuals of a
// random triple either exactly zero or orders of magnitude above the 1e-9
// decision tolerance, so true/false classifications cannot flip.
inline aptri::Rational random_rational(std::mt19937_64& rng, int max_num = 36,
                                       int max_den = 12) {
  std::uniform_int_distribution<int> num(1, max_num);
  std::uniform_int_distribution<int> den(1, max_den);
  return aptri::Rational(num(rng), den(rng));
}

inline aptri::Sides random_sides(std::mt19937_64& rng) {
  for (;;) {
    const aptri::Rational a = random_rational(rng);
    const aptri::Rational b = random_rational(rng);
    const aptri::Rational c = random_rational(rng);
    std::array<aptri::Rational, 3> v{a, b, c};
    std::sort(v.begin(), v.end());
    if (v[0] + v[1] > v[2]) return aptri::Sides::validate(a, b, c);
  }
}

}  // namespace aptri_test
