// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string_view>

#include "aptri/core_geometry.hpp"

namespace aptri {

enum class ProgressionKind { Arithmetic, Geometric, Harmonic };

inline constexpr double kDefaultTolerance = 1e-9;

/// Scaled residual of the progression condition:
///   arithmetic  |2 x2 - x1 - x3| / max(|2 x2|, |x1|, |x3|)
///   geometric   |x2^2 - x1 x3|  / max(|x2^2|, |x1 x3|)
///   harmonic    arithmetic residual of the reciprocals
/// Geometric and harmonic require all operands nonzero (ZeroOperand).
double progression_residual(ProgressionKind kind, double x1, double x2, double x3);

/// Exact counterpart for rational triples; no rounding in the decision.
Rational progression_residual(ProgressionKind kind, const Rational& x1,
                              const Rational& x2, const Rational& x3);

bool is_progression(ProgressionKind kind, double x1, double x2, double x3,
                    double tol);

/// The seven equivalences between a progression condition on a triangle and
/// a trigonometric (or similarity) characterization:
///   i    sides arithmetic            <=> cot(A/2), cot(B/2), cot(G/2) arithmetic
///   ii   sides arithmetic            <=> tan(A/2) tan(G/2) = 1/3
///   iii  side squares arithmetic     <=> cot A, cot B, cot G arithmetic
///   iv   angles and sides arithmetic <=> equilateral
///   v    angles arithmetic, sides geometric <=> equilateral
///   vi   right triangle, sides arithmetic   <=> similar to (3, 4, 5)
///   vii  sides harmonic              <=> sin^2 of half-angles harmonic
enum class EquivalenceId { I = 1, II, III, IV, V, VI, VII };

std::string_view equivalence_label(EquivalenceId id);  // "i" .. "vii"

/// Both sides of one equivalence, evaluated independently. Side conditions
/// are decided in exact rational arithmetic; trigonometric characterizations
/// go through floating angles. holds <=> residual <= tolerance.
struct EquivalenceReport {
  EquivalenceId id;
  bool lhs_holds;
  bool rhs_holds;
  double lhs_residual;
  double rhs_residual;
  double tolerance;
};

EquivalenceReport check_equivalence(EquivalenceId id, const Sides& s,
                                    double tol = kDefaultTolerance);

}  // namespace aptri
