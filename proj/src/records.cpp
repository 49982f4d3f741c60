// SPDX-License-Identifier: Apache-2.0
#include "aptri/records.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace aptri {

namespace mp = boost::multiprecision;

namespace {

std::string fmt_g9(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::string fmt_g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

const char* bool_text(bool v) { return v ? "true" : "false"; }

OutputRecord record_from(const IntegerTriangle& t) {
  return OutputRecord{t.params.kappa(), t.params.lambda(), t.params.d(),
                      t.alpha,           t.beta,            t.gamma,
                      t.rho,             t.sin_a_coeff,     t.a_deg,
                      t.phi_deg,         t.gamma_deg};
}

double a_deg_from_sin_coeff(const Rational& coeff) {
  if (coeff == Rational(1, 2)) return 60.0;
  return std::asin(to_double(coeff) * std::numbers::sqrt3) * kDegPerRad;
}

// codepoints, not bytes, so the radical sign does not skew the columns
size_t display_width(const std::string& s) {
  size_t n = 0;
  for (unsigned char ch : s)
    if ((ch & 0xC0) != 0x80) ++n;
  return n;
}

// column-aligned plain-text table
std::string render_table_text(const std::vector<std::string>& header,
                              const std::vector<std::vector<std::string>>& rows) {
  std::vector<size_t> width(header.size());
  for (size_t i = 0; i < header.size(); ++i) width[i] = display_width(header[i]);
  for (const auto& row : rows)
    for (size_t i = 0; i < row.size(); ++i)
      width[i] = std::max(width[i], display_width(row[i]));
  std::ostringstream out;
  auto emit = [&](const std::vector<std::string>& row) {
    for (size_t i = 0; i < row.size(); ++i) {
      out << row[i];
      if (i + 1 < row.size())
        out << std::string(width[i] - display_width(row[i]) + 2, ' ');
    }
    out << '\n';
  };
  emit(header);
  for (const auto& row : rows) emit(row);
  return out.str();
}

}  // namespace

std::string format_sin_coeff(const Rational& coeff) {
  const BigInt num = mp::numerator(coeff);
  const BigInt den = mp::denominator(coeff);
  std::string head = num == 1 ? "√3" : num.str() + "√3";
  if (den == 1) return head;
  return head + "/" + den.str();
}

std::vector<OutputRecord> table_records() {
  // (kappa, lambda, d) in the canonical listing order: lambda-major,
  // kappa ascending, d = 1 for both odd and d = 4 for mixed parity.
  static constexpr int kRows[][3] = {
      {1, 1, 1}, {2, 1, 4}, {3, 1, 1}, {4, 1, 4}, {5, 1, 1}, {3, 2, 4},
      {5, 2, 4}, {1, 3, 1}, {4, 3, 4}, {5, 3, 1}, {1, 4, 4}, {1, 5, 1},
  };
  std::vector<OutputRecord> out;
  out.reserve(std::size(kRows));
  for (const auto& row : kRows)
    out.push_back(record_from(triangle_from_params(
        TriangleParams::validate(row[2], row[0], row[1]))));
  return out;
}

std::vector<OutputRecord> generate_records(const BigInt& kappa_max,
                                           const BigInt& lambda_max,
                                           const std::vector<BigInt>& d_list) {
  if (kappa_max < 1 || lambda_max < 1)
    fail(ErrorCode::BadArgument, "kappa-max and lambda-max must be at least 1");
  std::vector<BigInt> ds = d_list;
  for (const BigInt& d : ds)
    if (d < 1) fail(ErrorCode::BadArgument, "d values must be at least 1");
  std::sort(ds.begin(), ds.end());
  ds.erase(std::unique(ds.begin(), ds.end()), ds.end());

  std::vector<OutputRecord> out;
  for (BigInt lambda = 1; lambda <= lambda_max; ++lambda) {
    for (BigInt kappa = 1; kappa <= kappa_max; ++kappa) {
      if (mp::gcd(kappa, lambda) != 1) continue;
      if (lambda > kappa && lambda < 3 * kappa) continue;
      const bool both_odd = mp::bit_test(kappa, 0) && mp::bit_test(lambda, 0);
      std::vector<BigInt> effective;
      if (ds.empty()) {
        effective.push_back(both_odd ? 1 : 4);
      } else {
        for (const BigInt& d : ds)
          if (both_odd || (d & 3) == 0) effective.push_back(d);
      }
      for (const BigInt& d : effective)
        out.push_back(record_from(
            triangle_from_params(TriangleParams::validate(d, kappa, lambda))));
    }
  }
  return out;
}

std::vector<OutputRecord> enumerate_records(const BigInt& max_gamma) {
  std::vector<OutputRecord> out;
  for (const IntegerTriangle& t : enumerate_triangles(max_gamma))
    out.push_back(record_from(t));
  return out;
}

std::string render_records(std::span<const OutputRecord> records, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::Csv: {
      out << kRecordCsvHeader << '\n';
      for (const OutputRecord& r : records) {
        out << r.kappa.str() << ',' << r.lambda.str() << ',' << r.d.str() << ','
            << r.alpha.str() << ',' << r.beta.str() << ',' << r.gamma.str() << ','
            << mp::numerator(r.rho).str() << ',' << mp::denominator(r.rho).str() << ','
            << mp::numerator(r.sin_a_coeff).str() << ','
            << mp::denominator(r.sin_a_coeff).str() << ',' << fmt_g9(r.a_deg)
            << ',' << fmt_g9(r.phi_deg) << ',' << fmt_g9(r.gamma_deg) << '\n';
      }
      return out.str();
    }
    case Format::Json: {
      out << "[\n";
      for (size_t i = 0; i < records.size(); ++i) {
        const OutputRecord& r = records[i];
        out << "  {\"kappa\": " << r.kappa.str()
            << ", \"lambda\": " << r.lambda.str() << ", \"d\": " << r.d.str()
            << ", \"alpha\": " << r.alpha.str() << ", \"beta\": " << r.beta.str()
            << ", \"gamma\": " << r.gamma.str()
            << ", \"rho_num\": " << mp::numerator(r.rho).str()
            << ", \"rho_den\": " << mp::denominator(r.rho).str()
            << ", \"sinA_num\": " << mp::numerator(r.sin_a_coeff).str()
            << ", \"sinA_den\": " << mp::denominator(r.sin_a_coeff).str()
            << ", \"A_deg\": " << fmt_g9(r.a_deg)
            << ", \"phi_deg\": " << fmt_g9(r.phi_deg)
            << ", \"Gamma_deg\": " << fmt_g9(r.gamma_deg) << "}"
            << (i + 1 < records.size() ? "," : "") << '\n';
      }
      out << "]\n";
      return out.str();
    }
    case Format::Human: {
      std::vector<std::string> header{"kappa", "lambda", "d",     "alpha",
                                      "beta",  "gamma",  "rho",   "sinA",
                                      "A_deg", "phi_deg", "Gamma_deg"};
      std::vector<std::vector<std::string>> rows;
      for (const OutputRecord& r : records)
        rows.push_back({r.kappa.str(), r.lambda.str(), r.d.str(), r.alpha.str(),
                        r.beta.str(), r.gamma.str(), format_rational(r.rho),
                        format_sin_coeff(r.sin_a_coeff), fmt_g9(r.a_deg),
                        fmt_g9(r.phi_deg), fmt_g9(r.gamma_deg)});
      return render_table_text(header, rows);
    }
  }
  fail(ErrorCode::BadArgument, "unknown format");
}

VerifyReport verify_triple(const BigInt& alpha, const BigInt& beta,
                           const BigInt& gamma) {
  const Sides sides =
      Sides::validate(Rational(alpha), Rational(beta), Rational(gamma));
  const BigInt a = mp::numerator(sides.a());
  const BigInt b = mp::numerator(sides.b());
  const BigInt c = mp::numerator(sides.c());

  const BigInt beta_sq = b * b;
  const BigInt law_rhs = a * a + c * c - a * c;
  const bool ap = beta_sq == law_rhs;

  VerifyReport report{a,       b,      c,  ap, beta_sq, law_rhs, rho_of(sides),
                      std::nullopt, 0., 0., 0.};
  if (ap) {
    report.sin_a_coeff = Rational(a, 2 * b);
    report.a_deg = a_deg_from_sin_coeff(*report.sin_a_coeff);
    report.b_deg = 60.0;
    report.gamma_deg = 120.0 - report.a_deg;
  } else {
    const Angles ang = angles_from_sides(sides);
    report.a_deg = ang.a_deg;
    report.b_deg = ang.b_deg;
    report.gamma_deg = ang.gamma_deg;
  }
  return report;
}

std::string render_verify(const VerifyReport& r, Format format) {
  std::ostringstream out;
  const bool ap = r.angles_arithmetic;
  switch (format) {
    case Format::Csv: {
      out << "alpha,beta,gamma,valid,angles_arithmetic,rho_num,rho_den,"
             "sinA_num,sinA_den,A_deg,B_deg,Gamma_deg\n";
      out << r.alpha.str() << ',' << r.beta.str() << ',' << r.gamma.str()
          << ",true," << bool_text(ap) << ',' << mp::numerator(r.rho).str()
          << ',' << mp::denominator(r.rho).str() << ',';
      if (ap)
        out << mp::numerator(*r.sin_a_coeff).str() << ','
            << mp::denominator(*r.sin_a_coeff).str();
      else
        out << ',';
      out << ',' << fmt_g9(r.a_deg) << ',' << fmt_g9(r.b_deg) << ','
          << fmt_g9(r.gamma_deg) << '\n';
      return out.str();
    }
    case Format::Json: {
      out << "{\"alpha\": " << r.alpha.str() << ", \"beta\": " << r.beta.str()
          << ", \"gamma\": " << r.gamma.str() << ", \"valid\": true"
          << ", \"angles_arithmetic\": " << bool_text(ap)
          << ", \"rho_num\": " << mp::numerator(r.rho).str()
          << ", \"rho_den\": " << mp::denominator(r.rho).str();
      if (ap)
        out << ", \"sinA_num\": " << mp::numerator(*r.sin_a_coeff).str()
            << ", \"sinA_den\": " << mp::denominator(*r.sin_a_coeff).str();
      else
        out << ", \"sinA_num\": null, \"sinA_den\": null";
      out << ", \"A_deg\": " << fmt_g9(r.a_deg)
          << ", \"B_deg\": " << fmt_g9(r.b_deg)
          << ", \"Gamma_deg\": " << fmt_g9(r.gamma_deg) << "}\n";
      return out.str();
    }
    case Format::Human: {
      out << "triangle (" << r.alpha.str() << ", " << r.beta.str() << ", "
          << r.gamma.str() << "): valid\n";
      if (ap) {
        out << "angles in arithmetic progression: yes (" << r.beta_sq.str()
            << " = " << r.law_rhs.str() << ")\n";
        out << "rho = " << format_rational(r.rho) << '\n';
        out << "sin A = " << format_sin_coeff(*r.sin_a_coeff) << '\n';
      } else {
        out << "angles in arithmetic progression: no (beta^2 = "
            << r.beta_sq.str() << ", alpha^2 + gamma^2 - alpha*gamma = "
            << r.law_rhs.str() << ")\n";
        out << "rho = " << format_rational(r.rho) << '\n';
      }
      out << "A = " << fmt_g9(r.a_deg) << ", B = " << fmt_g9(r.b_deg)
          << ", Gamma = " << fmt_g9(r.gamma_deg) << " (degrees)\n";
      return out.str();
    }
  }
  fail(ErrorCode::BadArgument, "unknown format");
}

ClassifyReport classify_sides(const Rational& a, const Rational& b,
                              const Rational& c, double tol) {
  const Sides sides = Sides::validate(a, b, c);
  const Angles ang = angles_from_sides(sides);

  ClassifyReport report{sides.a(), sides.b(), sides.c(), tol, {}, {}};

  const auto add_exact = [&](const char* target, const char* kind,
                             ProgressionKind pk, const Rational& x1,
                             const Rational& x2, const Rational& x3) {
    const double res = to_double(progression_residual(pk, x1, x2, x3));
    report.progressions.push_back({target, kind, res <= tol, res});
  };
  const auto add_float = [&](const char* kind, ProgressionKind pk) {
    const double res =
        progression_residual(pk, ang.a_deg, ang.b_deg, ang.gamma_deg);
    report.progressions.push_back({"angles", kind, res <= tol, res});
  };

  add_exact("sides", "arithmetic", ProgressionKind::Arithmetic, sides.a(),
            sides.b(), sides.c());
  add_exact("sides", "geometric", ProgressionKind::Geometric, sides.a(),
            sides.b(), sides.c());
  add_exact("sides", "harmonic", ProgressionKind::Harmonic, sides.a(),
            sides.b(), sides.c());
  add_float("arithmetic", ProgressionKind::Arithmetic);
  add_float("geometric", ProgressionKind::Geometric);
  add_float("harmonic", ProgressionKind::Harmonic);
  const Rational a2 = sides.a() * sides.a();
  const Rational b2 = sides.b() * sides.b();
  const Rational c2 = sides.c() * sides.c();
  add_exact("squares", "arithmetic", ProgressionKind::Arithmetic, a2, b2, c2);
  add_exact("squares", "geometric", ProgressionKind::Geometric, a2, b2, c2);
  add_exact("squares", "harmonic", ProgressionKind::Harmonic, a2, b2, c2);

  for (EquivalenceId id :
       {EquivalenceId::I, EquivalenceId::II, EquivalenceId::III,
        EquivalenceId::IV, EquivalenceId::V, EquivalenceId::VI,
        EquivalenceId::VII})
    report.equivalences.push_back(check_equivalence(id, sides, tol));
  return report;
}

std::string render_classify(const ClassifyReport& r, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::Csv: {
      out << "check,lhs_holds,rhs_holds,lhs_residual,rhs_residual,tolerance\n";
      for (const ProgressionCheck& p : r.progressions)
        out << p.target << '_' << p.kind << ',' << bool_text(p.holds) << ",,"
            << fmt_g9(p.residual) << ",," << fmt_g9(r.tolerance) << '\n';
      for (const EquivalenceReport& e : r.equivalences)
        out << "equivalence_" << equivalence_label(e.id) << ','
            << bool_text(e.lhs_holds) << ',' << bool_text(e.rhs_holds) << ','
            << fmt_g9(e.lhs_residual) << ',' << fmt_g9(e.rhs_residual) << ','
            << fmt_g9(e.tolerance) << '\n';
      return out.str();
    }
    case Format::Json: {
      out << "{\"a\": \"" << format_rational(r.a) << "\", \"b\": \""
          << format_rational(r.b) << "\", \"c\": \"" << format_rational(r.c)
          << "\", \"tolerance\": " << fmt_g9(r.tolerance)
          << ",\n \"progressions\": [\n";
      for (size_t i = 0; i < r.progressions.size(); ++i) {
        const ProgressionCheck& p = r.progressions[i];
        out << "  {\"target\": \"" << p.target << "\", \"kind\": \"" << p.kind
            << "\", \"holds\": " << bool_text(p.holds)
            << ", \"residual\": " << fmt_g9(p.residual) << "}"
            << (i + 1 < r.progressions.size() ? "," : "") << '\n';
      }
      out << " ],\n \"equivalences\": [\n";
      for (size_t i = 0; i < r.equivalences.size(); ++i) {
        const EquivalenceReport& e = r.equivalences[i];
        out << "  {\"id\": \"" << equivalence_label(e.id)
            << "\", \"lhs_holds\": " << bool_text(e.lhs_holds)
            << ", \"rhs_holds\": " << bool_text(e.rhs_holds)
            << ", \"lhs_residual\": " << fmt_g9(e.lhs_residual)
            << ", \"rhs_residual\": " << fmt_g9(e.rhs_residual)
            << ", \"tolerance\": " << fmt_g9(e.tolerance) << "}"
            << (i + 1 < r.equivalences.size() ? "," : "") << '\n';
      }
      out << " ]}\n";
      return out.str();
    }
    case Format::Human: {
      out << "triangle (" << format_rational(r.a) << ", " << format_rational(r.b)
          << ", " << format_rational(r.c) << "), tolerance " << fmt_g9(r.tolerance)
          << "\n\nprogressions:\n";
      for (const ProgressionCheck& p : r.progressions)
        out << "  " << p.target << ' ' << p.kind << ": "
            << (p.holds ? "yes" : "no") << "  (residual " << fmt_g9(p.residual)
            << ")\n";
      out << "\nequivalences (lhs / rhs):\n";
      for (const EquivalenceReport& e : r.equivalences)
        out << "  " << equivalence_label(e.id) << ": "
            << (e.lhs_holds ? "yes" : "no") << " / "
            << (e.rhs_holds ? "yes" : "no") << "  (residuals "
            << fmt_g9(e.lhs_residual) << ", " << fmt_g9(e.rhs_residual) << ")\n";
      return out.str();
    }
  }
  fail(ErrorCode::BadArgument, "unknown format");
}

ConstructReport construct_report(const Rational& beta, const Rational& rho) {
  return ConstructReport{beta, rho, construct_from_rho(beta, rho)};
}

std::string render_construct(const ConstructReport& r, Format format) {
  const Construction& c = r.construction;
  const bool exact = c.exact_sides.has_value();
  std::ostringstream out;
  switch (format) {
    case Format::Csv: {
      out << "alpha,beta,gamma,exact_alpha,exact_beta,exact_gamma,A_deg,B_deg,"
             "Gamma_deg,rho_num,rho_den,exact\n";
      out << fmt_g17(c.alpha) << ',' << fmt_g17(c.beta) << ','
          << fmt_g17(c.gamma) << ',';
      if (exact)
        out << format_rational(c.exact_sides->a()) << ','
            << format_rational(c.exact_sides->b()) << ','
            << format_rational(c.exact_sides->c());
      else
        out << ",,";
      out << ',' << fmt_g9(c.angles.a_deg) << ',' << fmt_g9(c.angles.b_deg)
          << ',' << fmt_g9(c.angles.gamma_deg) << ','
          << mp::numerator(r.rho).str() << ',' << mp::denominator(r.rho).str()
          << ',' << bool_text(exact) << '\n';
      return out.str();
    }
    case Format::Json: {
      out << "{\"alpha\": " << fmt_g17(c.alpha)
          << ", \"beta\": " << fmt_g17(c.beta)
          << ", \"gamma\": " << fmt_g17(c.gamma);
      if (exact)
        out << ", \"exact_alpha\": \"" << format_rational(c.exact_sides->a())
            << "\", \"exact_beta\": \"" << format_rational(c.exact_sides->b())
            << "\", \"exact_gamma\": \"" << format_rational(c.exact_sides->c())
            << '"';
      else
        out << ", \"exact_alpha\": null, \"exact_beta\": null, "
               "\"exact_gamma\": null";
      out << ", \"A_deg\": " << fmt_g9(c.angles.a_deg)
          << ", \"B_deg\": " << fmt_g9(c.angles.b_deg)
          << ", \"Gamma_deg\": " << fmt_g9(c.angles.gamma_deg)
          << ", \"rho_num\": " << mp::numerator(r.rho).str()
          << ", \"rho_den\": " << mp::denominator(r.rho).str()
          << ", \"exact\": " << bool_text(exact) << "}\n";
      return out.str();
    }
    case Format::Human: {
      out << "constructed triangle for beta = " << format_rational(r.beta)
          << ", rho = " << format_rational(r.rho) << '\n';
      if (exact)
        out << "sides: alpha = " << format_rational(c.exact_sides->a())
            << ", beta = " << format_rational(c.exact_sides->b())
            << ", gamma = " << format_rational(c.exact_sides->c())
            << " (exact)\n";
      else
        out << "sides: alpha = " << fmt_g17(c.alpha)
            << ", beta = " << fmt_g17(c.beta)
            << ", gamma = " << fmt_g17(c.gamma) << '\n';
      out << "angles: A = " << fmt_g9(c.angles.a_deg)
          << ", B = " << fmt_g9(c.angles.b_deg)
          << ", Gamma = " << fmt_g9(c.angles.gamma_deg) << " (degrees)\n";
      return out.str();
    }
  }
  fail(ErrorCode::BadArgument, "unknown format");
}

}  // namespace aptri
