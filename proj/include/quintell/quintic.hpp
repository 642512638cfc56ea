#pragma once

// The two-parameter quintic
//
//     e + h d Y + c Y^2 + h b Y^3 + a Y^4 + h Y^5 = 0
//
// with coefficients e, d, c, b, a determined by x.  When x = dn(u) and
// h = sn(3u) for modulus k, Y = k is a root.  This header builds the family,
// certifies that root, recovers the modulus from (x, h), completes the root
// set by deflation, and inverts the related dn / sn multiple-angle relations.

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "quintell/elliptic.hpp"
#include "quintell/polynomial.hpp"

namespace quintell {

template <typename Scalar>
struct QuinticFamily {
  Scalar x;
  Scalar e;
  Scalar d;
  Scalar c;
  Scalar b;
  Scalar a;

  /// Ascending coefficients of the quintic for a given h.
  Polynomial<Scalar> coefficients(const Scalar& h) const {
    return make_polynomial<Scalar>({e, h * d, c, h * b, a, h});
  }
};

/// Coefficients from x; the square root is sqrt(1 - x^2) (principal branch
/// for complex x).
template <typename Scalar>
QuinticFamily<Scalar> build_family(const Scalar& x) {
  const Scalar one{1.0};
  const Scalar x2 = x * x;
  const Scalar x4 = x2 * x2;
  const Scalar x6 = x4 * x2;
  const Scalar x8 = x4 * x4;
  using std::sqrt;
  const Scalar w = sqrt(one - x2);
  return {x,
          w * (one - Scalar{4.0} * x2 + Scalar{6.0} * x4 - Scalar{4.0} * x6 + x8),
          one - Scalar{6.0} * x4 + Scalar{8.0} * x6 - Scalar{3.0} * x8,
          w * (Scalar{-2.0} + Scalar{8.0} * x2 - Scalar{6.0} * x4),
          Scalar{-2.0} + Scalar{6.0} * x4 - Scalar{4.0} * x6,
          (one - Scalar{4.0} * x2) * w};
}

/// e + hdY + cY^2 + hbY^3 + aY^4 + hY^5 by Horner on the interleaved form.
template <typename Scalar, typename T>
auto evaluate_quintic(const QuinticFamily<Scalar>& f, const T& h, const T& Y) {
  return ((((h * Y + f.a) * Y + h * f.b) * Y + f.c) * Y + h * f.d) * Y + f.e;
}

/// |quintic(Y)| / (max coefficient magnitude * max(1, |Y|)^5).
template <typename Scalar, typename T>
double quintic_residual(const QuinticFamily<Scalar>& f, const T& h, const T& Y) {
  return scaled_residual(f.coefficients(Scalar(h)), Y);
}

/// d + b k^2 + k^4, the bracket multiplying h k in the quintic at Y = k.
/// Together with the triplication denominator D it satisfies D + M = 0.
template <typename Scalar>
Scalar leading_bracket(const QuinticFamily<Scalar>& f, const Scalar& k) {
  const Scalar k2 = k * k;
  return f.d + f.b * k2 + k2 * k2;
}

enum class SolveMethod { kForwardIdentity, kInverseBisection, kDeflation };

std::string to_string(SolveMethod method);

enum class SearchStatus { kFound, kNoAdmissibleRoot, kUnderdetermined };

std::string to_string(SearchStatus status);

struct Candidate {
  double value;
  double residual;
  /// Secondary quantity that travels with the candidate (dn(u) for the
  /// dn-ratio inversion), NaN when unused.
  double companion;
};

struct CandidateSet {
  SearchStatus status = SearchStatus::kNoAdmissibleRoot;
  std::vector<Candidate> candidates;

  bool found() const { return status == SearchStatus::kFound; }
  /// True when some candidate value lies within `tolerance` of `value`.
  bool contains(double value, double tolerance) const;
};

struct DeflationResult {
  std::vector<std::complex<double>> co_roots;
  std::vector<double> residuals;
  /// h = 0: the quintic collapses to the quartic e + cY^2 + aY^4 and the
  /// co-roots are that quartic's four roots (the known root among them).
  bool degree_dropped = false;
  /// The supplied root's residual exceeded 1e-10 (still below 1e-8).
  bool ill_conditioned = false;
};

struct SolveCertificate {
  std::complex<double> root;
  double residual;
  std::optional<double> recovered_m0;
  std::vector<std::complex<double>> co_roots;
  std::vector<double> co_root_residuals;
  SolveMethod method;
  bool degree_dropped = false;
  bool ill_conditioned = false;

  /// Product of all five roots; equals -e/h for a genuine root set.
  std::complex<double> root_product() const;
};

/// Synthetic division by (Y - known_root), quartic by its resolvent cubic,
/// then at most five Newton steps per root on the original quintic.
/// Throws DomainError when the known root's residual is not below 1e-8.
DeflationResult deflate_and_solve(const QuinticFamily<std::complex<double>>& f,
                                  std::complex<double> h, std::complex<double> known_root);
DeflationResult deflate_and_solve(const QuinticFamily<double>& f, double h, double known_root);

/// x = dn(u), h = sn(3u); certify Y = k and complete the root set.
SolveCertificate elliptic_root_forward(double u, double m);

/// All m0 with dn(u) = x and sn(3u) = h for some u in [0, K(m0)], i.e. the
/// parameters for which Y = sqrt(m0) solves the (x, h) quintic.  Scans 1024
/// grid points over the admissible m, bisects each sign change to 1e-14 and
/// keeps roots whose quintic residual at Y = sqrt(m0) is below 1e-10.
/// (x, h) = (1, 0) is reported as underdetermined.
CandidateSet recover_modulus(double x, double h);

/// Certificate for a recovered m0: Y = sqrt(m0) plus the four co-roots.
SolveCertificate certify_recovered(double x, double h, double m0);

/// dn(K/3) from the quintic at h = 1, Y = k, solved as a polynomial in
/// X = x^2.  The first candidate is the one that agrees with direct
/// evaluation; the rest are the other admissible roots.
CandidateSet dn_third_from_quintic(const Modulus& k);

/// From lambda = dn(u)/dn(3u): candidates for dn(3u) (value) with the
/// implied dn(u) = lambda dn(3u) (companion).
CandidateSet dn3u_from_ratio(double lambda, const Modulus& k);

/// Moduli k (not parameters) compatible with dn(u) = x1 and dn(3u) = x3.
CandidateSet modulus_from_dn_pair(double x1, double x3);

/// Moduli k compatible with dn(u) = x1 and dn(4u) = x4.
CandidateSet modulus_from_dn_dn4(double x1, double x4);

/// Moduli k with sd(3u) = 1 - 9x^2 + 24x^4 - 16x^6 where x = dn(u).
CandidateSet modulus_from_sd_condition(double x);

/// The sextic right-hand side 1 - 9x^2 + 24x^4 - 16x^6.
double sd_condition_target(double x);

}  // namespace quintell
