#pragma once

// Checkable statements with their measured residuals, and the report that
// collects them.

#include <ostream>
#include <string>
#include <vector>

namespace quintell {

enum class ClaimStatus { kPass, kFail, kUndetermined };

std::string to_string(ClaimStatus status);

struct Claim {
  std::string id;
  std::string description;
  ClaimStatus status = ClaimStatus::kUndetermined;
  /// NaN when no residual could be measured.
  double residual = 0.0;
  double tolerance = 0.0;
  std::string branch_notes;
  /// Known misprint: reported, never counted against the exit code.
  bool erratum_expected = false;
};

/// PASS iff residual < tolerance; a non-finite residual is UNDETERMINED.
Claim make_claim(std::string id, std::string description, double residual, double tolerance,
                      std::string branch_notes = {}, bool erratum_expected = false);

Claim make_undetermined(std::string id, std::string description, std::string branch_notes,
                             bool erratum_expected = false);

struct ClaimSummary {
  int pass = 0;
  int fail = 0;
  int undetermined = 0;
  /// Claims not marked erratum_expected whose status is not PASS.
  int gating_failures = 0;
};

ClaimSummary summarize(const std::vector<Claim>& claims);

struct ClaimsReport {
  std::string tool_version;
  std::string timestamp;
  std::vector<Claim> claims;

  ClaimSummary summary() const { return summarize(claims); }
  /// 0 iff every claim not marked erratum_expected passes.
  int exit_code() const { return summary().gating_failures == 0 ? 0 : 1; }
};

/// Current UTC time as YYYY-MM-DDTHH:MM:SSZ.
std::string utc_timestamp();

/// Numbers use 17 significant digits.
std::string format_number(double value);

void write_text(const ClaimsReport& report, std::ostream& out);
/// One JSON object per line: a header record, one record per claim, and a
/// summary record.  Non-finite residuals are written as null.
void write_json_lines(const ClaimsReport& report, std::ostream& out);

}  // namespace quintell
