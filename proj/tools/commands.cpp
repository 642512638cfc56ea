#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <iterator>
#include <limits>
#include <regex>
#include <sstream>
#include <utility>
#include <vector>

#include "json.hpp"
#include "quintell/audit.hpp"
#include "quintell/claims.hpp"
#include "quintell/errors.hpp"
#include "quintell/modular.hpp"
#include "quintell/quintic.hpp"
#include "quintell/recognize.hpp"
#include "quintell/trisection.hpp"

namespace quintell::cli {

namespace {

using nlohmann::json;

// One output record: ordered key/value pairs rendered as "key = value"
// lines or as a single JSON object.
class Record {
 public:
  explicit Record(std::string kind) { fields_.emplace_back("record", std::move(kind)); }

  Record& num(const std::string& key, double v) {
    fields_.emplace_back(key, std::isfinite(v) ? json(v) : json(nullptr));
    return *this;
  }
  Record& str(const std::string& key, std::string v) {
    fields_.emplace_back(key, std::move(v));
    return *this;
  }
  Record& integer(const std::string& key, long long v) {
    fields_.emplace_back(key, v);
    return *this;
  }
  Record& flag(const std::string& key, bool v) {
    fields_.emplace_back(key, v);
    return *this;
  }

  void write(std::ostream& out, Format format) const {
    if (format == Format::kJsonLines) {
      // Written by hand so the field order is kept.
      std::string line = "{";
      bool first = true;
      for (const auto& [key, value] : fields_) {
        line += (first ? "" : ",") + json(key).dump() + ":" + value.dump();
        first = false;
      }
      out << line << "}\n";
      return;
    }
    out << "[" << fields_.front().second.get<std::string>() << "]\n";
    for (std::size_t i = 1; i < fields_.size(); ++i) {
      const auto& [key, value] = fields_[i];
      out << key << " = ";
      if (value.is_string()) {
        out << value.get<std::string>();
      } else if (value.is_number_float()) {
        out << format_number(value.get<double>());
      } else if (value.is_null()) {
        out << "nan";
      } else {
        out << value.dump();
      }
      out << "\n";
    }
  }

 private:
  std::vector<std::pair<std::string, json>> fields_;
};

double require(const std::optional<double>& v, const char* flag) {
  if (!v) throw UsageError{std::string("missing required flag ") + flag};
  return *v;
}

std::string complex_text(std::complex<double> z) {
  if (z.imag() == 0.0) return format_number(z.real());
  return format_number(z.real()) + (z.imag() < 0 ? " - " : " + ") + format_number(std::abs(z.imag())) + "i";
}

long digits_for_bits(long bits) { return static_cast<long>(std::floor(static_cast<double>(bits) * std::log10(2.0))); }

void write_candidate(Record& rec, const std::optional<AlgebraicCandidate>& c, long bits) {
  rec.integer("precision_bits", bits);
  if (!c) {
    rec.str("polynomial", "none");
    return;
  }
  std::string coeffs;
  for (const mpz_class& v : c->coefficients) coeffs += (coeffs.empty() ? "" : " ") + v.get_str();
  rec.str("polynomial", c->to_string())
      .integer("degree", c->degree)
      .str("coefficients_ascending", coeffs)
      .str("height", c->height.get_str())
      .str("polynomial_residual", c->eval_residual.to_string(6))
      .flag("palindromic", c->palindromic())
      .flag("palindromic_in_iy", c->palindromic_in_iy());
}

Rational parse_r(const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const DomainError& e) {
    throw UsageError{e.what()};
  }
}

}  // namespace

int run_singular(const Options& opts, std::ostream& out) {
  if (!opts.r) throw UsageError{"missing required flag --r"};
  const Rational r = parse_r(*opts.r);
  const SingularModulus sm = singular_modulus(r);
  const long start_bits = opts.precision.value_or(BigReal::kDefaultPrecision);
  const AlgebraicNote note = modulus_is_algebraic_note(r, start_bits, opts.degree, std::max(1024L, start_bits));
  const long bits = std::max(start_bits, note.bits);
  const BigReal extended = singular_modulus_extended(r, bits);

  Record rec("singular");
  rec.str("r", r.to_string())
      .num("k", sm.k)
      .num("m", sm.m)
      .num("kprime", sm.kprime)
      .num("q", sm.q)
      .num("defining_residual", sm.defining_residual)
      .num("extended_vs_binary64", std::abs(extended.to_double() - sm.k))
      .str("k_extended", extended.to_string(static_cast<int>(digits_for_bits(bits))));
  rec.write(out, opts.format);
  Record alg("algebraic");
  write_candidate(alg, note.candidate, note.bits);
  alg.write(out, opts.format);
  return 0;
}

int run_build(const Options& opts, std::ostream& out) {
  const double x = require(opts.x, "--x");
  const double h = require(opts.h, "--h");
  if (!(std::abs(x) <= 1.0)) throw UsageError{"--x must lie in [-1, 1]"};
  const QuinticFamily<double> f = build_family(x);
  const RealPolynomial p = f.coefficients(h);
  Record rec("build");
  rec.num("x", x).num("h", h).num("e", f.e).num("d", f.d).num("c", f.c).num("b", f.b).num("a", f.a);
  for (Eigen::Index i = 0; i < p.size(); ++i) rec.num("coefficient_Y" + std::to_string(i), p(i));
  // The coefficients are polynomial in x and sqrt(1 - x^2); this is their
  // round-off scale, the only error they carry.
  rec.num("rounding_bound", 64.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, max_abs_coefficient(p)));
  const bool degenerate = f.e == 0.0 && f.d == 0.0 && f.c == 0.0 && f.b == 0.0 && f.a == 0.0;
  if (degenerate) rec.str("warning", "e, d, c, b, a all vanish; the quintic degenerates to h Y^5");
  rec.write(out, opts.format);
  return 0;
}

int run_solve(const Options& opts, std::ostream& out) {
  const double x = require(opts.x, "--x");
  const double h = require(opts.h, "--h");
  const CandidateSet set = recover_modulus(x, h);
  Record head("solve");
  head.num("x", x).num("h", h).str("status", to_string(set.status)).integer("candidates",
                                                                               static_cast<long long>(set.candidates.size()));
  head.write(out, opts.format);
  if (!set.found()) return 0;
  const QuinticFamily<double> family = build_family(x);
  const double expected_product = h == 0.0 ? std::nan("") : -family.e / h;
  for (const Candidate& c : set.candidates) {
    const SolveCertificate cert = certify_recovered(x, h, c.value);
    Record rec("certificate");
    rec.num("m0", c.value)
        .num("root", cert.root.real())
        .num("root_residual", cert.residual)
        .str("method", to_string(cert.method))
        .flag("degree_dropped", cert.degree_dropped)
        .flag("ill_conditioned", cert.ill_conditioned);
    for (std::size_t i = 0; i < cert.co_roots.size(); ++i) {
      rec.str("co_root_" + std::to_string(i + 1), complex_text(cert.co_roots[i]));
      rec.num("co_root_" + std::to_string(i + 1) + "_residual", cert.co_root_residuals[i]);
    }
    if (!cert.degree_dropped) {
      rec.str("root_product", complex_text(cert.root_product()));
      rec.num("root_product_deviation",
              std::abs(cert.root_product() - expected_product) / std::max(1e-300, std::abs(expected_product)));
    }
    rec.write(out, opts.format);
  }
  return 0;
}

int run_dn_third(const Options& opts, std::ostream& out) {
  if (opts.r.has_value() == opts.k.has_value()) throw UsageError{"dn-third takes exactly one of --r or --k"};
  Record rec("dn_third");
  const TableEntry* entry = nullptr;
  double k = 0.0;
  if (opts.r) {
    const Rational r = parse_r(*opts.r);
    const SingularModulus sm = singular_modulus(r);
    k = sm.k;
    rec.str("r", r.to_string()).num("k", k).num("defining_residual", sm.defining_residual);
    entry = find_table_entry(r);
  } else {
    k = *opts.k;
    if (!(k > 0.0 && k < 1.0)) throw UsageError{"--k must lie in (0, 1)"};
    rec.num("k", k);
  }
  const Modulus mod = Modulus::from_k(k);
  const double numeric = dn_third_numeric(mod.m());
  rec.num("numeric", numeric);
  for (OuterBranch branch : {OuterBranch::kPrincipal, OuterBranch::kReflected}) {
    const std::string key = "formula_" + to_string(branch);
    try {
      const double v = dn_third_closed_form(mod, branch);
      rec.num(key, v).num(key + "_deviation", std::abs(v - numeric));
    } catch (const BranchError& e) {
      rec.str(key, std::string("branch failure: ") + e.what());
    }
  }
  if (entry) {
    try {
      const double v = entry->expression.value(256).to_double();
      rec.str("table_expression", entry->expression.source()).num("table", v).num("table_deviation",
                                                                                 std::abs(v - numeric));
    } catch (const BranchError& e) {
      rec.str("table", std::string("branch failure: ") + e.what());
    }
  }
  rec.write(out, opts.format);
  return 0;
}

int run_audit(const Options& opts, std::ostream& out) {
  const ClaimsReport report = quintell::run_audit(AuditOptions{opts.only});
  std::ofstream file;
  std::ostream* sink = &out;
  if (opts.out) {
    file.open(*opts.out);
    if (!file) throw std::runtime_error("cannot open report file " + *opts.out);
    sink = &file;
  }
  if (opts.format == Format::kJsonLines) {
    write_json_lines(report, *sink);
  } else {
    write_text(report, *sink);
  }
  if (opts.out) {
    file.close();
    if (!file) throw std::runtime_error("error writing report file " + *opts.out);
    const ClaimSummary s = report.summary();
    out << "summary: pass=" << s.pass << " fail=" << s.fail << " undetermined=" << s.undetermined
        << " gating_failures=" << s.gating_failures << "\n";
  }
  return report.exit_code();
}

int run_recognize(const Options& opts, std::istream& in, std::ostream& out) {
  std::string literal;
  if (opts.value) {
    literal = *opts.value;
  } else {
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    static const std::regex keyed(R"(k_extended\W+([-+]?[0-9][0-9.eE+-]*))");
    static const std::regex bare(R"([-+]?(?:[0-9]+\.?[0-9]*|\.[0-9]+)(?:[eE][-+]?[0-9]+)?)");
    std::smatch match;
    if (std::regex_search(text, match, keyed)) {
      literal = match[1];
    } else if (std::regex_search(text, match, bare)) {
      literal = match[0];
    } else {
      throw UsageError{"recognize: no number on standard input"};
    }
  }
  if (opts.degree < 1 || opts.degree > 16) throw UsageError{"--degree must lie in [1, 16]"};
  const long bits = opts.precision.value_or(precision_for_decimal(literal));
  BigReal alpha(bits);
  try {
    alpha = BigReal::from_string(literal, bits);
  } catch (const DomainError& e) {
    throw UsageError{e.what()};
  }
  std::optional<mpz_class> height;
  if (opts.height) {
    mpz_class hv;
    if (hv.set_str(*opts.height, 10) != 0 || hv <= 0) throw UsageError{"--height must be a positive integer"};
    height = hv;
  }
  const std::optional<AlgebraicCandidate> found = recognize(alpha, opts.degree, height);
  Record rec("recognize");
  rec.str("value", literal).integer("max_degree", opts.degree);
  rec.str("max_height", height ? height->get_str() : "per-degree default 2^floor(2P/(3(d+1)))");
  write_candidate(rec, found, bits);
  rec.write(out, opts.format);
  return 0;
}

}  // namespace quintell::cli
