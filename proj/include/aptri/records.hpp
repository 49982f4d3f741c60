// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "aptri/integer_triangles.hpp"
#include "aptri/progressions.hpp"
#include "aptri/rho_construction.hpp"

namespace aptri {

enum class Format { Csv, Json, Human };

/// One row of a triangle listing. Angles are printed with 9 significant
/// digits; rho and sin A stay exact (sin A = sin_a_coeff * sqrt(3)).
struct OutputRecord {
  BigInt kappa;
  BigInt lambda;
  BigInt d;
  BigInt alpha;
  BigInt beta;
  BigInt gamma;
  Rational rho;
  Rational sin_a_coeff;
  double a_deg;
  double phi_deg;
  double gamma_deg;
};

inline constexpr const char* kRecordCsvHeader =
    "kappa,lambda,d,alpha,beta,gamma,rho_num,rho_den,sinA_num,sinA_den,"
    "A_deg,phi_deg,Gamma_deg";

/// The built-in twelve-row reference table, in its canonical order
/// (d = 1 for kappa, lambda both odd, d = 4 for mixed parity).
std::vector<OutputRecord> table_records();

/// Every valid (kappa, lambda, d) with kappa <= kappa_max and
/// lambda <= lambda_max, emitted once, lambda-major then kappa ascending.
/// An empty d_list means the canonical choice d = 1 / d = 4 by parity;
/// otherwise each listed d that satisfies the parity rule is used.
std::vector<OutputRecord> generate_records(const BigInt& kappa_max,
                                           const BigInt& lambda_max,
                                           const std::vector<BigInt>& d_list = {});

/// One record per distinct side triple with gamma <= max_gamma, sorted.
std::vector<OutputRecord> enumerate_records(const BigInt& max_gamma);

std::string render_records(std::span<const OutputRecord> records, Format format);

/// Verdict for an integer triple: is it a triangle, and does its angle
/// sequence form an arithmetic progression (decided exactly through
/// beta^2 = alpha^2 + gamma^2 - alpha gamma on the sorted sides).
struct VerifyReport {
  BigInt alpha;
  BigInt beta;
  BigInt gamma;  // sorted ascending
  bool angles_arithmetic;
  BigInt beta_sq;   // the two exact operands of the decision
  BigInt law_rhs;
  Rational rho;
  std::optional<Rational> sin_a_coeff;  // present iff angles_arithmetic
  double a_deg;
  double b_deg;
  double gamma_deg;
};

VerifyReport verify_triple(const BigInt& alpha, const BigInt& beta,
                           const BigInt& gamma);
std::string render_verify(const VerifyReport& report, Format format);

struct ProgressionCheck {
  const char* target;  // "sides" | "angles" | "squares"
  const char* kind;    // "arithmetic" | "geometric" | "harmonic"
  bool holds;
  double residual;
};

/// Progression kinds on the sides, angles and squared sides, plus all seven
/// equivalences, for one triangle.
struct ClassifyReport {
  Rational a;
  Rational b;
  Rational c;  // sorted sides
  double tolerance;
  std::vector<ProgressionCheck> progressions;
  std::vector<EquivalenceReport> equivalences;
};

ClassifyReport classify_sides(const Rational& a, const Rational& b,
                              const Rational& c,
                              double tol = kDefaultTolerance);
std::string render_classify(const ClassifyReport& report, Format format);

struct ConstructReport {
  Rational beta;
  Rational rho;
  Construction construction;
};

ConstructReport construct_report(const Rational& beta, const Rational& rho);
std::string render_construct(const ConstructReport& report, Format format);

/// "4√3/13"-style rendering of sin A = coeff * sqrt(3).
std::string format_sin_coeff(const Rational& coeff);

}  // namespace aptri
