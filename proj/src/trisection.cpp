#include "quintell/trisection.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <sstream>

#include "quintell/bracketing.hpp"
#include "quintell/errors.hpp"

namespace quintell {

namespace detail {
extern const char* const kDnThirdTableText;
}

namespace {

std::vector<TableEntry> load_table() {
  std::vector<TableEntry> out;
  std::istringstream in(detail::kDnThirdTableText);
  std::string line;
  while (std::getline(in, line)) {
    const std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    const std::size_t bar = line.find('|');
    if (bar == std::string::npos) throw DomainError("dn(K/3) table: missing '|' in line '" + line + "'");
    std::string expression = line.substr(bar + 1);
    expression.erase(0, expression.find_first_not_of(" \t"));
    expression.erase(expression.find_last_not_of(" \t\r") + 1);
    out.push_back({Rational::parse(line.substr(0, bar)), RadicalExpression::parse(expression)});
  }
  return out;
}

}  // namespace

const std::vector<TableEntry>& dn_third_table() {
  static const std::vector<TableEntry> table = load_table();
  return table;
}

const TableEntry* find_table_entry(const Rational& r) {
  for (const TableEntry& e : dn_third_table()) {
    if (e.r == r) return &e;
  }
  return nullptr;
}

double dn_third_numeric(double m) { return jacobi_sn_cn_dn(complete_K(m) / 3.0, m).dn; }

std::string to_string(OuterBranch branch) {
  return branch == OuterBranch::kPrincipal ? "principal" : "reflected";
}

double dn_third_squared_closed_form(const Modulus& k, OuterBranch branch) {
  const double m = k.m();
  const double mc = 1.0 - m;
  const double t = m * mc;  // (kk')^2
  const double t13 = std::cbrt(t);
  const double t23 = t13 * t13;  // (kk')^(4/3)
  const double eps = m - 0.5;
  // 2^(-2/3) - t^(1/3) = (1/4 - t) / (a^2 + ab + b^2) with a = 2^(-2/3),
  // b = t^(1/3), and 1/4 - t = eps^2.
  const double a = std::cbrt(0.25);
  const double s = std::sqrt(a * a + a * t13 + t13 * t13);
  // |A| = |eps| t^(1/3) / s;  4(2k^6 - 3k^4 + k^2) = -8 t eps.
  const double abs_A = std::abs(eps) * t13 / s;
  const bool principal = branch == OuterBranch::kPrincipal;
  const double A = principal ? abs_A : -abs_A;
  // -8 t eps / A has magnitude 8 t^(2/3) s; at eps = 0 both branches take
  // the common limit, which is the positive one.
  const double magnitude = 8.0 * t23 * s;
  const double ratio = (eps > 0.0 && principal) || (eps < 0.0 && !principal) ? -magnitude : magnitude;
  const double radicand = -2.0 * std::cbrt(2.0) * t23 + ratio + 8.0 * mc * mc - 8.0 * mc;
  if (radicand < 0.0) {
    throw BranchError("dn(K/3) closed form: negative radicand " + format_number(radicand) + " under the " +
                      to_string(branch) + " branch at k = " + format_number(k.k()));
  }
  return 1.0 - m - A + 0.5 * std::sqrt(radicand);
}

double dn_third_closed_form(const Modulus& k, OuterBranch branch) {
  const double sq = dn_third_squared_closed_form(k, branch);
  if (sq < 0.0) {
    throw BranchError("dn(K/3) closed form: negative dn^2 = " + format_number(sq) + " under the " +
                      to_string(branch) + " branch");
  }
  return std::sqrt(sq);
}

TrisectionValue trisection_value(const TableEntry& entry) {
  const SingularModulus sm = singular_modulus(entry.r);
  const double closed = entry.expression.value(256).to_double();
  const double numeric = dn_third_numeric(sm.m);
  return {entry.r, sm.k, closed, numeric, std::abs(closed - numeric)};
}

std::vector<Claim> verify_dn_third_table() {
  const std::vector<TableEntry>& table = dn_third_table();
  std::vector<std::future<Claim>> pending;
  pending.reserve(table.size());
  for (const TableEntry& entry : table) {
    pending.push_back(std::async(std::launch::async, [&entry] {
      const std::string id = "table.r=" + entry.r.to_string();
      const std::string description =
          "tabulated dn(K/3, k_r^2) = " + entry.expression.source() + " against direct evaluation";
      try {
        const TrisectionValue v = trisection_value(entry);
        return make_claim(id, description, v.deviation, 1e-9,
                          "closed form " + format_number(v.closed_form_value) + ", numeric " +
                              format_number(v.numeric_value) + ", k_r " + format_number(v.k),
                          true);
      } catch (const BranchError& e) {
        return make_undetermined(id, description, e.what(), true);
      }
    }));
  }
  std::vector<Claim> out;
  out.reserve(pending.size());
  for (auto& f : pending) out.push_back(f.get());
  return out;
}

double trisection_equation_lhs(double X, double h, double k) {
  const double k2 = k * k;
  const double w = 1.0 - X;
  const double first = k2 * k2 + k2 * (-4.0 * X * X * X + 6.0 * X * X - 2.0) + w * w * w * (3.0 * X + 1.0);
  const double second = k2 * k2 * (1.0 - 4.0 * X) + k2 * (-6.0 * X * X + 8.0 * X - 2.0) + w * w * w * w;
  return h * k * first + second * std::sqrt(std::max(0.0, w));
}

double h_half_polynomial_residual(double X, double k) {
  const double k2 = k * k;
  const double k4 = k2 * k2;
  RealPolynomial p = RealPolynomial::Zero(16);
  p[15] = 2.0;
  p[13] = 18.0;
  p[11] = 42.0;
  p[9] = -38.0;
  p[8] = 7.0;
  p[7] = -186.0;
  p[6] = -8.0;
  p[5] = 12.0 * k2 + 54.0;
  p[4] = 6.0 - 6.0 * k2;
  p[3] = 8.0 * k4 - 24.0 * k2 + 270.0;
  p[1] = -6.0 * k4 + 12.0 * k2 - 162.0;
  p[0] = -k4 + 2.0 * k2 - 1.0;
  return std::abs(evaluate(p, X)) / max_abs_coefficient(p);
}

TrisectionSolution trisection_solution(double h, const Modulus& k) {
  if (!(std::abs(h) <= 1.0)) throw DomainError("trisection_solution: |h| must not exceed 1");
  const double u = incomplete_F(std::asin(h), k.m()) / 3.0;
  const double dn = jacobi_sn_cn_dn(u, k.m()).dn;
  TrisectionSolution s{};
  s.X_squared = dn * dn;
  s.X_unsquared = dn;
  s.residual_squared = std::abs(trisection_equation_lhs(s.X_squared, h, k.k()));
  s.residual_unsquared = std::abs(trisection_equation_lhs(s.X_unsquared, h, k.k()));
  if (s.residual_squared <= s.residual_unsquared) {
    s.X = s.X_squared;
    s.residual = s.residual_squared;
    s.branch_note = "squared reading X = dn^2 (unsquared residual " + format_number(s.residual_unsquared) + ")";
  } else {
    s.X = s.X_unsquared;
    s.residual = s.residual_unsquared;
    s.branch_note = "unsquared reading X = dn (squared residual " + format_number(s.residual_squared) + ")";
  }
  return s;
}

CandidateSet modulus_from_dn_third(double v) {
  if (!(v > 0.0 && v < 1.0)) throw DomainError("modulus_from_dn_third: dn(K/3) value must lie in (0, 1)");
  const auto g = [v](double k) { return dn_third_numeric(k * k) - v; };
  const double lo = 1e-6;
  const double hi = 1.0 - 1e-9;
  CandidateSet out;
  for (double k : scan_roots(g, lo, hi, 1024, 1e-12)) {
    const double residual = std::abs(g(k));
    if (residual < 1e-10) out.candidates.push_back({k, residual, k * k});
  }
  out.status = out.candidates.empty() ? SearchStatus::kNoAdmissibleRoot : SearchStatus::kFound;
  return out;
}

}  // namespace quintell
