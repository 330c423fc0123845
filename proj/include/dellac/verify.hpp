#pragma once

#include <string>
#include <vector>

namespace dellac {

struct CheckResult {
  std::string name;
  std::string range;            // e.g. "N=2..8 even"
  bool passed = true;
  std::string counterexample;   // set whenever passed == false
  std::string detail;
  bool informational = false;   // a finding that never fails the run
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool all_passed() const;
  /// 0 when every check passed, 1 otherwise.
  int exit_code() const { return all_passed() ? 0 : 1; }
  std::string to_text() const;
  std::string to_json() const;
};

struct VerifyBounds {
  int max_even = 8;
  int max_odd = 9;
  int max_type_a = 7;
  int threads = 1;
};

/// Runs every cross-check up to the given sizes. Throws DomainError when a
/// bound is out of the supported range.
VerificationReport run_verify(const VerifyBounds& bounds);

}  // namespace dellac
