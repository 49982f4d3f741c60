// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end. Talks to the shared library exclusively through
// the C interface in aptri.h.

#include <cstdint>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "aptri.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 2;
constexpr int kExitInternal = 3;

struct CommonOpts {
  aptri_format format = APTRI_FORMAT_CSV;
  std::string output;  // empty = stdout
};

void add_common(CLI::App* cmd, CommonOpts* opts) {
  static const std::map<std::string, aptri_format> kFormats{
      {"csv", APTRI_FORMAT_CSV},
      {"json", APTRI_FORMAT_JSON},
      {"human", APTRI_FORMAT_HUMAN}};
  cmd->add_option("--format", opts->format, "output format")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case))
      ->default_str("csv");
  cmd->add_option("--output", opts->output, "write to FILE instead of stdout");
}

int exit_code_for(aptri_status status) {
  if (status == APTRI_OK) return kExitOk;
  if (status == APTRI_ERR_INTERNAL) return kExitInternal;
  return kExitInvalidInput;
}

int report_failure(aptri_status status) {
  std::fprintf(stderr, "aptri: %s: %s\n", aptri_status_name(status),
               aptri_last_error());
  return exit_code_for(status);
}

int write_text(const char* text, const CommonOpts& opts) {
  if (opts.output.empty()) {
    std::fputs(text, stdout);
    return kExitOk;
  }
  std::FILE* f = std::fopen(opts.output.c_str(), "wb");
  if (f == nullptr) {
    std::fprintf(stderr, "aptri: cannot open output file '%s'\n",
                 opts.output.c_str());
    return kExitInvalidInput;
  }
  std::fputs(text, f);
  std::fclose(f);
  return kExitOk;
}

int emit_records(aptri_records* records, const CommonOpts& opts) {
  char* text = nullptr;
  aptri_status status = aptri_records_render(records, opts.format, &text);
  aptri_records_free(records);
  if (status != APTRI_OK) return report_failure(status);
  int rc = write_text(text, opts);
  aptri_string_free(text);
  return rc;
}

int emit_report(aptri_report* report, const CommonOpts& opts) {
  char* text = nullptr;
  aptri_status status = aptri_report_render(report, opts.format, &text);
  aptri_report_free(report);
  if (status != APTRI_OK) return report_failure(status);
  int rc = write_text(text, opts);
  aptri_string_free(text);
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"integer triangles whose angles form an arithmetic progression"};
  app.require_subcommand(1);

  int rc = kExitOk;

  // table
  {
    auto opts = std::make_shared<CommonOpts>();
    CLI::App* cmd =
        app.add_subcommand("table", "print the built-in twelve-row reference table");
    add_common(cmd, opts.get());
    cmd->callback([opts, &rc] {
      aptri_records* records = nullptr;
      aptri_status status = aptri_table(&records);
      rc = status == APTRI_OK ? emit_records(records, *opts)
                              : report_failure(status);
    });
  }

  // generate
  {
    auto opts = std::make_shared<CommonOpts>();
    auto kappa_max = std::make_shared<int64_t>(0);
    auto lambda_max = std::make_shared<int64_t>(0);
    auto d_list = std::make_shared<std::vector<int64_t>>();
    CLI::App* cmd = app.add_subcommand(
        "generate", "list all valid parameter triples within bounds");
    cmd->add_option("--kappa-max", *kappa_max, "largest kappa")->required();
    cmd->add_option("--lambda-max", *lambda_max, "largest lambda")->required();
    cmd->add_option("--d-list", *d_list,
                    "explicit d values (default: 1 or 4 by parity)")
        ->delimiter(',');
    add_common(cmd, opts.get());
    cmd->callback([opts, kappa_max, lambda_max, d_list, &rc] {
      aptri_records* records = nullptr;
      aptri_status status =
          aptri_generate(*kappa_max, *lambda_max, d_list->data(),
                         d_list->size(), &records);
      rc = status == APTRI_OK ? emit_records(records, *opts)
                              : report_failure(status);
    });
  }

  // enumerate
  {
    auto opts = std::make_shared<CommonOpts>();
    auto max_gamma = std::make_shared<int64_t>(0);
    CLI::App* cmd = app.add_subcommand(
        "enumerate", "every integer triangle with gamma up to the bound");
    cmd->add_option("--max-gamma", *max_gamma, "largest allowed side")->required();
    add_common(cmd, opts.get());
    cmd->callback([opts, max_gamma, &rc] {
      aptri_records* records = nullptr;
      aptri_status status = aptri_enumerate(*max_gamma, &records);
      rc = status == APTRI_OK ? emit_records(records, *opts)
                              : report_failure(status);
    });
  }

  // verify
  {
    auto opts = std::make_shared<CommonOpts>();
    auto sides = std::make_shared<std::vector<int64_t>>();
    CLI::App* cmd = app.add_subcommand(
        "verify", "check whether a triple of integers is a triangle with "
                  "angles in arithmetic progression");
    cmd->add_option("sides", *sides, "alpha beta gamma")->expected(3);
    add_common(cmd, opts.get());
    cmd->callback([opts, sides, &rc] {
      aptri_report* report = nullptr;
      aptri_status status =
          aptri_verify((*sides)[0], (*sides)[1], (*sides)[2], &report);
      rc = status == APTRI_OK ? emit_report(report, *opts)
                              : report_failure(status);
    });
  }

  // classify
  {
    auto opts = std::make_shared<CommonOpts>();
    auto sides = std::make_shared<std::vector<std::string>>();
    auto tol = std::make_shared<double>(1e-9);
    CLI::App* cmd = app.add_subcommand(
        "classify", "progression kinds and equivalences for a triangle with "
                    "rational sides");
    cmd->add_option("sides", *sides, "a b c (integers, fractions or decimals)")
        ->expected(3);
    cmd->add_option("--tol", *tol, "decision tolerance")->default_str("1e-9");
    add_common(cmd, opts.get());
    cmd->callback([opts, sides, tol, &rc] {
      aptri_report* report = nullptr;
      aptri_status status =
          aptri_classify((*sides)[0].c_str(), (*sides)[1].c_str(),
                         (*sides)[2].c_str(), *tol, &report);
      rc = status == APTRI_OK ? emit_report(report, *opts)
                              : report_failure(status);
    });
  }

  // construct
  {
    auto opts = std::make_shared<CommonOpts>();
    auto beta = std::make_shared<std::string>();
    auto rho = std::make_shared<std::string>();
    CLI::App* cmd = app.add_subcommand(
        "construct",
        "build the unique such triangle from its middle side and rho");
    cmd->add_option("--beta", *beta, "middle side (rational)")->required();
    cmd->add_option("--rho", *rho, "perimeter / middle side, in (2, 3]")
        ->required();
    add_common(cmd, opts.get());
    cmd->callback([opts, beta, rho, &rc] {
      aptri_report* report = nullptr;
      aptri_status status =
          aptri_construct(beta->c_str(), rho->c_str(), &report);
      rc = status == APTRI_OK ? emit_report(report, *opts)
                              : report_failure(status);
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int cli_rc = app.exit(e);
    return cli_rc == 0 ? kExitOk : kExitInvalidInput;
  }
  return rc;
}
