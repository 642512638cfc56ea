#pragma once

// The full claims audit: every checkable identity, table value and worked
// example, each measured against an independent route.

#include <string>
#include <vector>

#include "quintell/claims.hpp"

namespace quintell {

struct AuditOptions {
  /// Keep only claims whose id starts with this prefix (all when empty).
  std::string only;
};

/// Claim groups run concurrently; the report order is fixed and every
/// random sample comes from a fixed-seed generator, so two runs differ only
/// in the timestamp.
ClaimsReport run_audit(const AuditOptions& options = {});

/// Id prefixes the audit can emit, for --only validation and help text.
std::vector<std::string> audit_prefixes();

}  // namespace quintell
