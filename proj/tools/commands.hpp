#pragma once

// Subcommand bodies of the quintell CLI, separated from argument parsing so
// tests can drive them with string streams.

#include <istream>
#include <optional>
#include <ostream>
#include <string>

namespace quintell::cli {

enum class Format { kText, kJsonLines };

struct Options {
  std::optional<std::string> r;
  std::optional<double> k;
  std::optional<double> x;
  std::optional<double> h;
  std::optional<std::string> value;
  int degree = 8;
  std::optional<std::string> height;
  Format format = Format::kText;
  std::string only;
  std::optional<std::string> out;
  std::optional<long> precision;
};

/// Thrown for malformed or missing flags; main() maps it to exit code 2.
struct UsageError {
  std::string message;
};

// Each returns the process exit code.
int run_singular(const Options& opts, std::ostream& out);
int run_build(const Options& opts, std::ostream& out);
int run_solve(const Options& opts, std::ostream& out);
int run_dn_third(const Options& opts, std::ostream& out);
int run_audit(const Options& opts, std::ostream& out);
/// Reads the value from `in` when --value is absent.
int run_recognize(const Options& opts, std::istream& in, std::ostream& out);

}  // namespace quintell::cli
