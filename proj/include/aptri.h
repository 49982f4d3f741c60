/* SPDX-License-Identifier: Apache-2.0 */
/*
 * aptri - triangles whose angles form an arithmetic progression.
 *
 * C interface of the shared library: opaque handles, status codes, and
 * rendered output. All functions returning aptri_status set a thread-local
 * message retrievable through aptri_last_error() on failure. Strings
 * returned through char** are heap-allocated and must be released with
 * aptri_string_free().
 */
#ifndef APTRI_H
#define APTRI_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define APTRI_API __declspec(dllexport)
#else
#define APTRI_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum aptri_status {
  APTRI_OK = 0,
  APTRI_ERR_NON_POSITIVE_SIDE = 1,
  APTRI_ERR_TRIANGLE_INEQUALITY = 2,
  APTRI_ERR_ZERO_OPERAND = 3,
  APTRI_ERR_RHO_OUT_OF_RANGE = 4,
  APTRI_ERR_NOT_COPRIME = 5,
  APTRI_ERR_RATIO_CONDITION = 6,
  APTRI_ERR_PARITY = 7,
  APTRI_ERR_NON_POSITIVE = 8,
  APTRI_ERR_PARSE = 9,
  APTRI_ERR_OVERFLOW = 10,
  APTRI_ERR_BAD_ARGUMENT = 11,
  APTRI_ERR_INTERNAL = 12
} aptri_status;

typedef enum aptri_format {
  APTRI_FORMAT_CSV = 0,
  APTRI_FORMAT_JSON = 1,
  APTRI_FORMAT_HUMAN = 2
} aptri_format;

/* A list of triangle rows (from table/generate/enumerate). */
typedef struct aptri_records aptri_records;

/* A verify/classify/construct result. */
typedef struct aptri_report aptri_report;

/*
 * One row, with exact fractions broken into numerator/denominator pairs:
 * rho = rho_num/rho_den and sin A = (sina_num/sina_den) * sqrt(3), both in
 * lowest terms. Values that do not fit in 64 bits make aptri_records_get
 * return APTRI_ERR_OVERFLOW (rendering is not affected).
 */
typedef struct aptri_record_view {
  int64_t kappa;
  int64_t lambda;
  int64_t d;
  int64_t alpha;
  int64_t beta;
  int64_t gamma;
  int64_t rho_num;
  int64_t rho_den;
  int64_t sina_num;
  int64_t sina_den;
  double a_deg;
  double phi_deg;
  double gamma_deg;
} aptri_record_view;

APTRI_API const char* aptri_version(void);
APTRI_API const char* aptri_status_name(aptri_status status);

/* Message of the most recent failure on this thread; "" if none. */
APTRI_API const char* aptri_last_error(void);

APTRI_API void aptri_string_free(char* text);

/* The built-in twelve-row reference table. */
APTRI_API aptri_status aptri_table(aptri_records** out);

/*
 * Every valid parameter triple with kappa <= kappa_max, lambda <= lambda_max.
 * d_list may be NULL/empty for the canonical d (1 for kappa, lambda both odd,
 * 4 for mixed parity); otherwise the listed d values are used where the
 * parity rule admits them.
 */
APTRI_API aptri_status aptri_generate(int64_t kappa_max, int64_t lambda_max,
                                      const int64_t* d_list, size_t d_count,
                                      aptri_records** out);

/* One row per distinct integer triangle with gamma <= max_gamma. */
APTRI_API aptri_status aptri_enumerate(int64_t max_gamma, aptri_records** out);

APTRI_API size_t aptri_records_size(const aptri_records* records);
APTRI_API aptri_status aptri_records_get(const aptri_records* records,
                                         size_t index, aptri_record_view* out);
APTRI_API aptri_status aptri_records_render(const aptri_records* records,
                                            aptri_format format, char** out);
APTRI_API void aptri_records_free(aptri_records* records);

/* Is (alpha, beta, gamma) a triangle, and is its angle sequence an
 * arithmetic progression? Non-triangles are reported as errors. */
APTRI_API aptri_status aptri_verify(int64_t alpha, int64_t beta, int64_t gamma,
                                    aptri_report** out);

/* Progression kinds and the seven equivalences for a triangle with rational
 * sides ("3", "7/2", "1.25"). Pass tolerance <= 0 for the default 1e-9. */
APTRI_API aptri_status aptri_classify(const char* a, const char* b,
                                      const char* c, double tolerance,
                                      aptri_report** out);

/* Build the unique triangle with middle side beta and perimeter ratio rho,
 * 2 < rho <= 3; beta and rho are rational strings. */
APTRI_API aptri_status aptri_construct(const char* beta, const char* rho,
                                       aptri_report** out);

APTRI_API aptri_status aptri_report_render(const aptri_report* report,
                                           aptri_format format, char** out);
APTRI_API void aptri_report_free(aptri_report* report);

#ifdef __cplusplus
}
#endif

#endif /* APTRI_H */
