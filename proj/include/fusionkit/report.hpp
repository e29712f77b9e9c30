#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fusionkit/verdict.hpp"

namespace fusionkit {

/// Exit-code contract of the command line.
enum ExitCode : int { kAllPassed = 0, kCheckFailed = 1, kInputError = 2, kNumericError = 3 };

struct ReportEntry {
  std::string file;
  Verdict verdict;
  bool expected_failure = false;

  /// Failed without being expected to, or passed while expected to fail.
  bool unexpected() const;
};

struct ReportExport {
  std::string file;
  std::string kind;
  nlohmann::json data;
};

/// Machine-readable record of one command run. Rendering is deterministic
/// for fixed inputs, seed and tolerances (timing is opt-in).
struct RunReport {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;  // path, sha256
  std::uint64_t seed = 0;
  double tol = 0;
  double snap = 0;
  std::vector<ReportEntry> entries;
  std::vector<ReportExport> exports;
  std::vector<std::string> warnings;
  bool input_error = false;
  bool numeric_error = false;
  std::optional<double> elapsed_seconds;

  void add(std::string file, Verdict v, bool expected_failure = false);
  void append(RunReport&& other);
  int exit_code() const;

  /// One JSON object per line (header, verdicts, exports, summary), or a
  /// single JSON document when `single_document` is set.
  std::string render(bool single_document) const;
};

}  // namespace fusionkit
