// SPDX-License-Identifier: Apache-2.0
#include "aptri.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <variant>
#include <vector>

#include "aptri/records.hpp"

struct aptri_records {
  std::vector<aptri::OutputRecord> rows;
};

struct aptri_report {
  std::variant<aptri::VerifyReport, aptri::ClassifyReport,
               aptri::ConstructReport>
      value;
};

namespace {

thread_local std::string g_last_error;

aptri_status map_code(aptri::ErrorCode code) {
  using aptri::ErrorCode;
  switch (code) {
    case ErrorCode::NonPositiveSide: return APTRI_ERR_NON_POSITIVE_SIDE;
    case ErrorCode::TriangleInequality: return APTRI_ERR_TRIANGLE_INEQUALITY;
    case ErrorCode::ZeroOperand: return APTRI_ERR_ZERO_OPERAND;
    case ErrorCode::RhoOutOfRange: return APTRI_ERR_RHO_OUT_OF_RANGE;
    case ErrorCode::NotCoprime: return APTRI_ERR_NOT_COPRIME;
    case ErrorCode::RatioCondition: return APTRI_ERR_RATIO_CONDITION;
    case ErrorCode::Parity: return APTRI_ERR_PARITY;
    case ErrorCode::NonPositive: return APTRI_ERR_NON_POSITIVE;
    case ErrorCode::Parse: return APTRI_ERR_PARSE;
    case ErrorCode::Overflow: return APTRI_ERR_OVERFLOW;
    case ErrorCode::BadArgument: return APTRI_ERR_BAD_ARGUMENT;
    case ErrorCode::Internal: return APTRI_ERR_INTERNAL;
  }
  return APTRI_ERR_INTERNAL;
}

template <typename Fn>
aptri_status guarded(Fn&& fn) noexcept {
  try {
    fn();
    g_last_error.clear();
    return APTRI_OK;
  } catch (const aptri::Error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return APTRI_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return APTRI_ERR_INTERNAL;
  }
}

aptri_status bad_argument(const char* message) noexcept {
  g_last_error = message;
  return APTRI_ERR_BAD_ARGUMENT;
}

char* dup_string(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

aptri::Format map_format(aptri_format format) {
  switch (format) {
    case APTRI_FORMAT_CSV: return aptri::Format::Csv;
    case APTRI_FORMAT_JSON: return aptri::Format::Json;
    case APTRI_FORMAT_HUMAN: return aptri::Format::Human;
  }
  aptri::fail(aptri::ErrorCode::BadArgument, "unknown output format");
}

aptri::Rational parse_positive(const char* text, const char* what) {
  if (text == nullptr)
    aptri::fail(aptri::ErrorCode::BadArgument, std::string(what) + " is null");
  return aptri::parse_rational(text);
}

}  // namespace

extern "C" {

const char* aptri_version(void) { return "0.1.0"; }

const char* aptri_status_name(aptri_status status) {
  switch (status) {
    case APTRI_OK: return "ok";
    case APTRI_ERR_NON_POSITIVE_SIDE: return "non_positive_side";
    case APTRI_ERR_TRIANGLE_INEQUALITY: return "triangle_inequality_violation";
    case APTRI_ERR_ZERO_OPERAND: return "zero_operand";
    case APTRI_ERR_RHO_OUT_OF_RANGE: return "rho_out_of_range";
    case APTRI_ERR_NOT_COPRIME: return "not_coprime";
    case APTRI_ERR_RATIO_CONDITION: return "ratio_condition_violation";
    case APTRI_ERR_PARITY: return "parity_violation";
    case APTRI_ERR_NON_POSITIVE: return "non_positive";
    case APTRI_ERR_PARSE: return "parse_error";
    case APTRI_ERR_OVERFLOW: return "overflow";
    case APTRI_ERR_BAD_ARGUMENT: return "bad_argument";
    case APTRI_ERR_INTERNAL: return "internal_error";
  }
  return "unknown";
}

const char* aptri_last_error(void) { return g_last_error.c_str(); }

void aptri_string_free(char* text) { std::free(text); }

aptri_status aptri_table(aptri_records** out) {
  if (out == nullptr) return bad_argument("out is null");
  return guarded([&] { *out = new aptri_records{aptri::table_records()}; });
}

aptri_status aptri_generate(int64_t kappa_max, int64_t lambda_max,
                            const int64_t* d_list, size_t d_count,
                            aptri_records** out) {
  if (out == nullptr) return bad_argument("out is null");
  if (d_count > 0 && d_list == nullptr) return bad_argument("d_list is null");
  return guarded([&] {
    std::vector<aptri::BigInt> ds(d_list, d_list + d_count);
    *out = new aptri_records{
        aptri::generate_records(kappa_max, lambda_max, ds)};
  });
}

aptri_status aptri_enumerate(int64_t max_gamma, aptri_records** out) {
  if (out == nullptr) return bad_argument("out is null");
  return guarded(
      [&] { *out = new aptri_records{aptri::enumerate_records(max_gamma)}; });
}

size_t aptri_records_size(const aptri_records* records) {
  return records == nullptr ? 0 : records->rows.size();
}

aptri_status aptri_records_get(const aptri_records* records, size_t index,
                               aptri_record_view* out) {
  if (records == nullptr || out == nullptr)
    return bad_argument("records/out is null");
  if (index >= records->rows.size()) return bad_argument("index out of range");
  return guarded([&] {
    const aptri::OutputRecord& r = records->rows[index];
    out->kappa = aptri::checked_int64(r.kappa);
    out->lambda = aptri::checked_int64(r.lambda);
    out->d = aptri::checked_int64(r.d);
    out->alpha = aptri::checked_int64(r.alpha);
    out->beta = aptri::checked_int64(r.beta);
    out->gamma = aptri::checked_int64(r.gamma);
    out->rho_num = aptri::checked_int64(numerator(r.rho));
    out->rho_den = aptri::checked_int64(denominator(r.rho));
    out->sina_num = aptri::checked_int64(numerator(r.sin_a_coeff));
    out->sina_den = aptri::checked_int64(denominator(r.sin_a_coeff));
    out->a_deg = r.a_deg;
    out->phi_deg = r.phi_deg;
    out->gamma_deg = r.gamma_deg;
  });
}

aptri_status aptri_records_render(const aptri_records* records,
                                  aptri_format format, char** out) {
  if (records == nullptr || out == nullptr)
    return bad_argument("records/out is null");
  return guarded([&] {
    *out = dup_string(aptri::render_records(records->rows, map_format(format)));
  });
}

void aptri_records_free(aptri_records* records) { delete records; }

aptri_status aptri_verify(int64_t alpha, int64_t beta, int64_t gamma,
                          aptri_report** out) {
  if (out == nullptr) return bad_argument("out is null");
  return guarded([&] {
    *out = new aptri_report{
        aptri::verify_triple(aptri::BigInt(alpha), aptri::BigInt(beta),
                             aptri::BigInt(gamma))};
  });
}

aptri_status aptri_classify(const char* a, const char* b, const char* c,
                            double tolerance, aptri_report** out) {
  if (out == nullptr) return bad_argument("out is null");
  return guarded([&] {
    const double tol = tolerance > 0 ? tolerance : aptri::kDefaultTolerance;
    *out = new aptri_report{aptri::classify_sides(
        parse_positive(a, "a"), parse_positive(b, "b"), parse_positive(c, "c"),
        tol)};
  });
}

aptri_status aptri_construct(const char* beta, const char* rho,
                             aptri_report** out) {
  if (out == nullptr) return bad_argument("out is null");
  return guarded([&] {
    *out = new aptri_report{aptri::construct_report(
        parse_positive(beta, "beta"), parse_positive(rho, "rho"))};
  });
}

aptri_status aptri_report_render(const aptri_report* report,
                                 aptri_format format, char** out) {
  if (report == nullptr || out == nullptr)
    return bad_argument("report/out is null");
  return guarded([&] {
    const aptri::Format f = map_format(format);
    std::string text = std::visit(
        [&](const auto& value) -> std::string {
          using T = std::decay_t<decltype(value)>;
          if constexpr (std::is_same_v<T, aptri::VerifyReport>)
            return aptri::render_verify(value, f);
          else if constexpr (std::is_same_v<T, aptri::ClassifyReport>)
            return aptri::render_classify(value, f);
          else
            return aptri::render_construct(value, f);
        },
        report->value);
    *out = dup_string(text);
  });
}

void aptri_report_free(aptri_report* report) { delete report; }

}  // extern "C"
