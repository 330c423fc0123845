#include <iostream>
#include <string>

#include <omp.h>

#include "CLI11.hpp"

#include "dellac/jobs.hpp"
#include "dellac/version.hpp"

int main(int argc, char** argv) {
  using dellac::Command;

  CLI::App app{"Dellac configurations and degenerate flag varieties"};
  app.set_version_flag("--version", std::string(dellac::kVersion));
  app.require_subcommand(1);

  dellac::JobSpec spec;
  spec.threads = omp_get_max_threads();
  std::string cache_dir;
  std::string format;
  std::string in_path;
  std::string out_path;

  app.add_option("--threads", spec.threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--cache-dir", cache_dir, "Result cache directory (default: $DELLAC_CACHE_DIR)");

  auto* enumerate = app.add_subcommand("enumerate", "List every configuration of a size");
  enumerate->add_option("--family", spec.family)
      ->required()
      ->check(CLI::IsMember({"dellac", "symmetric"}));
  enumerate->add_option("--n", spec.n, "Number of columns")->required();
  enumerate->add_option("--out", out_path, "Output file (default: stdout)");
  enumerate->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  auto* stats = app.add_subcommand("stats", "Histogram of a statistic over a configuration file");
  stats->add_option("--in", in_path, "Configuration file, '-' for stdin")->required();
  stats->add_option("--statistic", spec.statistic)
      ->required()
      ->check(CLI::IsMember({"inv", "inv-tilde", "inv-prime"}));
  stats->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

  auto* poincare = app.add_subcommand("poincare", "Poincare polynomial of a variety");
  poincare->add_option("--variety", spec.family)
      ->required()
      ->check(CLI::IsMember({"a", "A", "sp-even", "sp-odd", "so-even", "so-odd"}));
  poincare->add_option("--n", spec.n)->required();
  poincare->add_option("--method", spec.method)
      ->check(CLI::IsMember({"statistic", "cells", "both"}));
  poincare->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* verify = app.add_subcommand("verify", "Run every cross-check up to the given sizes");
  verify->add_option("--max-even", spec.max_even);
  verify->add_option("--max-odd", spec.max_odd);
  verify->add_option("--max-type-a", spec.max_type_a);
  verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* sequence = app.add_subcommand("sequence", "Print a reference count sequence");
  sequence->add_option("--name", spec.sequence_name)
      ->required()
      ->check(CLI::IsMember({"genocchi", "genocchi_normalized", "r", "l"}));
  sequence->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : dellac::kExitInvalidInput;
  }

  if (*enumerate) spec.command = Command::Enumerate;
  if (*stats) spec.command = Command::Stats;
  if (*poincare) spec.command = Command::Poincare;
  if (*verify) spec.command = Command::Verify;
  if (*sequence) spec.command = Command::Sequence;
  if (!cache_dir.empty()) spec.cache_dir = cache_dir;
  if (!in_path.empty()) spec.in_path = in_path;
  if (!out_path.empty()) spec.out_path = out_path;
  if (!format.empty()) spec.format = dellac::parse_output_format(format);

  return dellac::run_job(spec, std::cout, std::cerr);
}
