// SPDX-License-Identifier: Apache-2.0
#include "aptri/progressions.hpp"

#include <algorithm>
#include <cmath>

namespace aptri {

namespace {

double arithmetic_residual(double x1, double x2, double x3) {
  const double twice_mid = 2.0 * x2;
  const double scale =
      std::max({std::abs(twice_mid), std::abs(x1), std::abs(x3)});
  if (scale == 0.0) return 0.0;
  return std::abs(twice_mid - x1 - x3) / scale;
}

Rational arithmetic_residual(const Rational& x1, const Rational& x2,
                             const Rational& x3) {
  const Rational twice_mid = 2 * x2;
  const Rational scale =
      std::max({Rational(abs(twice_mid)), Rational(abs(x1)), Rational(abs(x3))});
  if (scale == 0) return Rational(0);
  return Rational(abs(twice_mid - x1 - x3)) / scale;
}

void require_nonzero(double x1, double x2, double x3) {
  if (x1 == 0.0 || x2 == 0.0 || x3 == 0.0)
    fail(ErrorCode::ZeroOperand,
         "geometric/harmonic progression test requires nonzero operands");
}

void require_nonzero(const Rational& x1, const Rational& x2, const Rational& x3) {
  if (x1 == 0 || x2 == 0 || x3 == 0)
    fail(ErrorCode::ZeroOperand,
         "geometric/harmonic progression test requires nonzero operands");
}

// |u - v| scaled by the larger magnitude; 0 when both vanish.
double equality_residual(double u, double v) {
  const double scale = std::max(std::abs(u), std::abs(v));
  if (scale == 0.0) return 0.0;
  return std::abs(u - v) / scale;
}

Rational equality_residual(const Rational& u, const Rational& v) {
  const Rational scale = std::max(Rational(abs(u)), Rational(abs(v)));
  if (scale == 0) return Rational(0);
  return Rational(abs(u - v)) / scale;
}

}  // namespace

double progression_residual(ProgressionKind kind, double x1, double x2,
                            double x3) {
  switch (kind) {
    case ProgressionKind::Arithmetic:
      return arithmetic_residual(x1, x2, x3);
    case ProgressionKind::Geometric: {
      require_nonzero(x1, x2, x3);
      return equality_residual(x2 * x2, x1 * x3);
    }
    case ProgressionKind::Harmonic:
      require_nonzero(x1, x2, x3);
      return arithmetic_residual(1.0 / x1, 1.0 / x2, 1.0 / x3);
  }
  fail(ErrorCode::BadArgument, "unknown progression kind");
}

Rational progression_residual(ProgressionKind kind, const Rational& x1,
                              const Rational& x2, const Rational& x3) {
  switch (kind) {
    case ProgressionKind::Arithmetic:
      return arithmetic_residual(x1, x2, x3);
    case ProgressionKind::Geometric: {
      require_nonzero(x1, x2, x3);
      return equality_residual(Rational(x2 * x2), Rational(x1 * x3));
    }
    case ProgressionKind::Harmonic:
      require_nonzero(x1, x2, x3);
      return arithmetic_residual(Rational(1 / x1), Rational(1 / x2),
                                 Rational(1 / x3));
  }
  fail(ErrorCode::BadArgument, "unknown progression kind");
}

bool is_progression(ProgressionKind kind, double x1, double x2, double x3,
                    double tol) {
  return progression_residual(kind, x1, x2, x3) <= tol;
}

std::string_view equivalence_label(EquivalenceId id) {
  switch (id) {
    case EquivalenceId::I: return "i";
    case EquivalenceId::II: return "ii";
    case EquivalenceId::III: return "iii";
    case EquivalenceId::IV: return "iv";
    case EquivalenceId::V: return "v";
    case EquivalenceId::VI: return "vi";
    case EquivalenceId::VII: return "vii";
  }
  return "?";
}

EquivalenceReport check_equivalence(EquivalenceId id, const Sides& s,
                                    double tol) {
  const Rational& a = s.a();
  const Rational& b = s.b();
  const Rational& c = s.c();

  const Angles ang = angles_from_sides(s);
  const double half_a = ang.a_deg * kRadPerDeg / 2.0;
  const double half_b = ang.b_deg * kRadPerDeg / 2.0;
  const double half_c = ang.gamma_deg * kRadPerDeg / 2.0;

  const auto cot = [](double rad) { return std::cos(rad) / std::sin(rad); };

  double lhs = 0.0;
  double rhs = 0.0;
  switch (id) {
    case EquivalenceId::I:
      lhs = to_double(progression_residual(ProgressionKind::Arithmetic, a, b, c));
      rhs = arithmetic_residual(cot(half_a), cot(half_b), cot(half_c));
      break;
    case EquivalenceId::II:
      lhs = to_double(progression_residual(ProgressionKind::Arithmetic, a, b, c));
      rhs = equality_residual(std::tan(half_a) * std::tan(half_c), 1.0 / 3.0);
      break;
    case EquivalenceId::III:
      lhs = to_double(progression_residual(ProgressionKind::Arithmetic,
                                           Rational(a * a), Rational(b * b),
                                           Rational(c * c)));
      rhs = arithmetic_residual(cot(2 * half_a), cot(2 * half_b), cot(2 * half_c));
      break;
    case EquivalenceId::IV: {
      const double sides_ap =
          to_double(progression_residual(ProgressionKind::Arithmetic, a, b, c));
      const double angles_ap =
          arithmetic_residual(ang.a_deg, ang.b_deg, ang.gamma_deg);
      lhs = std::max(sides_ap, angles_ap);
      rhs = to_double(equality_residual(a, c));  // equilateral, sides sorted
      break;
    }
    case EquivalenceId::V: {
      const double sides_gp =
          to_double(progression_residual(ProgressionKind::Geometric, a, b, c));
      const double angles_ap =
          arithmetic_residual(ang.a_deg, ang.b_deg, ang.gamma_deg);
      lhs = std::max(sides_gp, angles_ap);
      rhs = to_double(equality_residual(a, c));
      break;
    }
    case EquivalenceId::VI: {
      const double right =
          to_double(equality_residual(Rational(a * a + b * b), Rational(c * c)));
      const double sides_ap =
          to_double(progression_residual(ProgressionKind::Arithmetic, a, b, c));
      lhs = std::max(right, sides_ap);
      // similar to (3, 4, 5), by exact cross-ratio
      rhs = to_double(std::max(equality_residual(Rational(4 * a), Rational(3 * b)),
                               equality_residual(Rational(5 * a), Rational(3 * c))));
      break;
    }
    case EquivalenceId::VII: {
      lhs = to_double(progression_residual(ProgressionKind::Harmonic, a, b, c));
      const double sa = std::sin(half_a);
      const double sb = std::sin(half_b);
      const double sc = std::sin(half_c);
      rhs = progression_residual(ProgressionKind::Harmonic, sa * sa, sb * sb,
                                 sc * sc);
      break;
    }
  }

  return EquivalenceReport{id, lhs <= tol, rhs <= tol, lhs, rhs, tol};
}

}  // namespace aptri
