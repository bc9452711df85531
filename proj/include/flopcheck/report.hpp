#pragma once

// Verification reports and the verify-all suite.

#include <string>
#include <vector>

#include <json.hpp>

namespace flopcheck {

inline constexpr const char* kReportSchemaVersion = "1";

enum class CheckStatus { Pass, Fail, Reported };

const char* to_string(CheckStatus s);

struct Check {
  std::string id;
  std::string anchor;   ///< the statement the check reproduces
  CheckStatus status;
  std::string summary;  ///< one-line human-readable result
  nlohmann::json payload = nlohmann::json::object();
};

struct SuiteParameters {
  int r = 2;
  int n = 4;
  int cutoff = 10;
};

struct VerificationReport {
  std::string suite;
  std::string engine_version;
  SuiteParameters parameters;
  std::vector<Check> checks;

  bool has_failures() const;
};

enum class ReportFormat { Text, Json };

/// JSON has sorted keys and string-valued numbers; text has one line per
/// check, "<STATUS> <id> <summary>".
std::string format_report(const VerificationReport& report, ReportFormat format);

/// Runs every verification check. Requires r = 2 and n >= 4; checks that
/// only make sense for n = 4 run at n = 4 regardless.
VerificationReport verify_all(const SuiteParameters& params);

}  // namespace flopcheck
