#pragma once

// dn at one third of the quarter period: the tabulated nested radicals for
// singular moduli, the general nested-radical formula in k, the
// sn(3u) = h solution in X = dn^2(u), and the inverse map from a value of
// dn(K/3) back to the modulus.

#include <string>
#include <vector>

#include "quintell/claims.hpp"
#include "quintell/elliptic.hpp"
#include "quintell/modular.hpp"
#include "quintell/quintic.hpp"
#include "quintell/radical.hpp"

namespace quintell {

struct TableEntry {
  Rational r;
  RadicalExpression expression;
};

/// The 23 tabulated dn(K/3, k_r^2) values, in table order.
const std::vector<TableEntry>& dn_third_table();

/// Table entry for r, or nullptr when r is not listed.
const TableEntry* find_table_entry(const Rational& r);

/// dn(K(m)/3 | m) by direct evaluation.
double dn_third_numeric(double m);

/// Which sign the square root A = sqrt((kk')^(4/3)/2^(2/3) + k^4 - k^2)
/// takes.  The principal choice reproduces dn(K/3) for k <= 1/sqrt(2) only;
/// the reflected choice (A <= 0) covers k >= 1/sqrt(2).
enum class OuterBranch { kPrincipal, kReflected };

std::string to_string(OuterBranch branch);

/// dn^2(K/3) from the general nested-radical formula
///   1 - k^2 - A + (1/2) sqrt(-2 cbrt(2) (kk')^(4/3) + 4(2k^6 - 3k^4 + k^2)/A + 8k'^4 - 8k'^2).
/// A^2 and 2k^6 - 3k^4 + k^2 share the factor (k^2 - 1/2); it is cancelled
/// before dividing, which keeps the value finite at k^2 = 1/2 (where both
/// branches meet).  A negative radicand under the chosen branch raises
/// BranchError.
double dn_third_squared_closed_form(const Modulus& k, OuterBranch branch = OuterBranch::kPrincipal);

/// Square root of dn_third_squared_closed_form.
double dn_third_closed_form(const Modulus& k, OuterBranch branch = OuterBranch::kPrincipal);

struct TrisectionValue {
  Rational r;
  double k;
  double closed_form_value;
  double numeric_value;
  double deviation;
};

TrisectionValue trisection_value(const TableEntry& entry);

/// One claim per table entry (tolerance 1e-9), in table order.  Entries are
/// evaluated concurrently.
std::vector<Claim> verify_dn_third_table();

/// h k [k^4 + k^2(-4X^3 + 6X^2 - 2) + (1-X)^3(3X+1)]
///   + [k^4(1-4X) + k^2(-6X^2 + 8X - 2) + (1-X)^4] sqrt(1-X).
double trisection_equation_lhs(double X, double h, double k);

/// The degree-15 polynomial in X printed for h = 1/2, divided by its largest
/// coefficient magnitude.
double h_half_polynomial_residual(double X, double k);

struct TrisectionSolution {
  /// dn^2(F(arcsin h)/3) and dn(F(arcsin h)/3).
  double X_squared;
  double X_unsquared;
  double residual_squared;
  double residual_unsquared;
  /// The reading with the smaller residual.
  double X;
  double residual;
  std::string branch_note;
};

/// X from the elliptic solution of the equation above, both readings
/// evaluated.  Requires |h| <= 1.
TrisectionSolution trisection_solution(double h, const Modulus& k);

/// Moduli k with dn(K/3, k^2) = v: 1024-point scan of k over (0, 1),
/// bisection to 1e-12, kept when |dn(K/3, k^2) - v| < 1e-10.  Candidate
/// values are k; companions are m = k^2.
CandidateSet modulus_from_dn_third(double v);

}  // namespace quintell
