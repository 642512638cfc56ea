#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "quintell/errors.hpp"

int main(int argc, char** argv) {
  using quintell::cli::Format;
  using quintell::cli::Options;

  CLI::App app{"Elliptic-function solutions of a two-parameter quintic, singular moduli, and a claims audit"};
  app.set_version_flag("--version", QUINTELL_VERSION);
  app.require_subcommand(1);
  // --h is a data flag, so help is long-form only.
  app.set_help_flag("--help", "Print this help message and exit");

  Options opts;
  std::string format = "text";
  const auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json-lines"}));
  };

  auto* singular = app.add_subcommand("singular", "Singular modulus k_r with K(1-k^2)/K(k^2) = sqrt(r)");
  singular->add_option("--r", opts.r, "Positive rational r as p/q or an integer")->required();
  singular->add_option("--precision", opts.precision, "Starting precision in bits for the relation search");
  singular->add_option("--degree", opts.degree, "Largest polynomial degree searched")->check(CLI::Range(1, 16));
  add_format(singular);

  auto* build = app.add_subcommand("build", "Quintic coefficients for given x and h");
  build->add_option("--x", opts.x, "dn(u)")->required();
  build->add_option("--h", opts.h, "sn(3u)")->required();
  add_format(build);

  auto* solve = app.add_subcommand("solve", "Recover the modulus from (x, h) and certify all five roots");
  solve->add_option("--x", opts.x, "dn(u)")->required();
  solve->add_option("--h", opts.h, "sn(3u)")->required();
  add_format(solve);

  auto* dn_third = app.add_subcommand("dn-third", "dn(K/3) by direct evaluation, nested radicals and the table");
  dn_third->add_option("--r", opts.r, "Singular modulus index r");
  dn_third->add_option("--k", opts.k, "Modulus k in (0, 1)");
  add_format(dn_third);

  auto* audit = app.add_subcommand("audit", "Run every claim check and write the report");
  audit->add_option("--only", opts.only, "Keep claims whose id starts with this prefix");
  audit->add_option("--out", opts.out, "Write the report to this file");
  add_format(audit);

  auto* recognize = app.add_subcommand("recognize", "Integer-relation search for a polynomial satisfied by a value");
  recognize->add_option("--value", opts.value, "Decimal value (read from standard input when absent)");
  recognize->add_option("--degree", opts.degree, "Largest polynomial degree searched")->check(CLI::Range(1, 16));
  recognize->add_option("--height", opts.height, "Largest coefficient magnitude accepted");
  recognize->add_option("--precision", opts.precision, "Working precision in bits");
  add_format(recognize);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  opts.format = format == "json-lines" ? Format::kJsonLines : Format::kText;

  try {
    if (*singular) return quintell::cli::run_singular(opts, std::cout);
    if (*build) return quintell::cli::run_build(opts, std::cout);
    if (*solve) return quintell::cli::run_solve(opts, std::cout);
    if (*dn_third) return quintell::cli::run_dn_third(opts, std::cout);
    if (*audit) return quintell::cli::run_audit(opts, std::cout);
    if (*recognize) return quintell::cli::run_recognize(opts, std::cin, std::cout);
  } catch (const quintell::cli::UsageError& e) {
    std::cerr << "usage error: " << e.message << "\n";
    return 2;
  } catch (const quintell::DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
