#pragma once

// Command implementations behind the CLI. Each returns the process exit
// code: 0 success, 1 verification failure, 2 invalid input.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace dellac {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitInvalidInput = 2;

enum class Command { Enumerate, Stats, Poincare, Verify, Sequence };

enum class OutputFormat { Text, Json, Csv };

OutputFormat parse_output_format(std::string_view name);

struct JobSpec {
  Command command = Command::Enumerate;
  std::string family;        // "dellac"/"symmetric" or a variety tag
  int n = 1;
  std::string method = "both";
  std::string statistic = "inv";
  std::string sequence_name;
  int max_even = 8;
  int max_odd = 9;
  int max_type_a = 7;
  int threads = 1;
  std::optional<std::filesystem::path> cache_dir;  // falls back to DELLAC_CACHE_DIR
  std::optional<std::filesystem::path> in_path;    // "-" reads stdin
  std::optional<std::filesystem::path> out_path;   // unset writes to `out`
  std::optional<OutputFormat> format;              // per-command default when unset
};

/// Runs the job. Data goes to `out` (or out_path), summaries and errors to
/// `err`. Never throws.
int run_job(const JobSpec& spec, std::ostream& out, std::ostream& err);

}  // namespace dellac
