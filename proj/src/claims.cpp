#include "quintell/claims.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>

#include "json.hpp"

namespace quintell {

std::string to_string(ClaimStatus status) {
  switch (status) {
    case ClaimStatus::kPass:
      return "PASS";
    case ClaimStatus::kFail:
      return "FAIL";
    case ClaimStatus::kUndetermined:
      return "UNDETERMINED";
  }
  return "UNDETERMINED";
}

Claim make_claim(std::string id, std::string description, double residual, double tolerance,
                      std::string branch_notes, bool erratum_expected) {
  Claim c{std::move(id), std::move(description), ClaimStatus::kUndetermined, residual, tolerance,
               std::move(branch_notes), erratum_expected};
  if (std::isfinite(residual)) c.status = residual < tolerance ? ClaimStatus::kPass : ClaimStatus::kFail;
  return c;
}

Claim make_undetermined(std::string id, std::string description, std::string branch_notes,
                             bool erratum_expected) {
  return {std::move(id), std::move(description), ClaimStatus::kUndetermined, std::nan(""), 0.0,
          std::move(branch_notes), erratum_expected};
}

ClaimSummary summarize(const std::vector<Claim>& claims) {
  ClaimSummary s;
  for (const Claim& c : claims) {
    switch (c.status) {
      case ClaimStatus::kPass:
        ++s.pass;
        break;
      case ClaimStatus::kFail:
        ++s.fail;
        break;
      case ClaimStatus::kUndetermined:
        ++s.undetermined;
        break;
    }
    if (!c.erratum_expected && c.status != ClaimStatus::kPass) ++s.gating_failures;
  }
  return s;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buffer[32];
  std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buffer;
}

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

void write_text(const ClaimsReport& report, std::ostream& out) {
  out << "quintell " << report.tool_version << " claims report\n";
  out << "timestamp: " << report.timestamp << "\n";
  for (const Claim& c : report.claims) {
    out << to_string(c.status) << "  " << c.id << "  residual=" << format_number(c.residual)
        << "  tolerance=" << format_number(c.tolerance);
    if (c.erratum_expected) out << "  [report-only]";
    out << "\n    " << c.description << "\n";
    if (!c.branch_notes.empty()) out << "    note: " << c.branch_notes << "\n";
  }
  const ClaimSummary s = report.summary();
  out << "summary: pass=" << s.pass << " fail=" << s.fail << " undetermined=" << s.undetermined
      << " gating_failures=" << s.gating_failures << "\n";
}

void write_json_lines(const ClaimsReport& report, std::ostream& out) {
  using nlohmann::json;
  out << json{{"record", "header"}, {"tool_version", report.tool_version}, {"timestamp", report.timestamp}}.dump()
      << "\n";
  for (const Claim& c : report.claims) {
    json j{{"record", "claim"},
           {"id", c.id},
           {"description", c.description},
           {"status", to_string(c.status)},
           {"residual", nullptr},
           {"tolerance", c.tolerance},
           {"branch_notes", c.branch_notes},
           {"erratum_expected", c.erratum_expected}};
    if (std::isfinite(c.residual)) j["residual"] = c.residual;
    out << j.dump() << "\n";
  }
  const ClaimSummary s = report.summary();
  out << json{{"record", "summary"},
              {"pass", s.pass},
              {"fail", s.fail},
              {"undetermined", s.undetermined},
              {"gating_failures", s.gating_failures}}
             .dump()
      << "\n";
}

}  // namespace quintell
