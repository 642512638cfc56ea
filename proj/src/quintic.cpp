#include "quintell/quintic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "quintell/bracketing.hpp"
#include "quintell/errors.hpp"
#include "quintell/multiangle.hpp"

namespace quintell {

namespace {

using Complex = std::complex<double>;

constexpr int kScanGrid = 1024;
constexpr double kCertifyQuintic = 1e-10;
constexpr double kCertifyRoundTrip = 1e-9;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

QuinticFamily<Complex> widen(const QuinticFamily<double>& f) {
  return {f.x, f.e, f.d, f.c, f.b, f.a};
}

// sqrt(1 - x^2) N(X) - h k D(X) with X = x^2: the quintic at Y = k after the
// identity D + (d + b k^2 + k^4) = 0 has been used.
RealPolynomial numerator_in_X(double k) {
  const double k2 = k * k;
  const double k4 = k2 * k2;
  return make_polynomial<double>({k4 - 2.0 * k2 + 1.0, -4.0 * k4 + 8.0 * k2 - 4.0, 6.0 - 6.0 * k2, -4.0, 1.0});
}

RealPolynomial denominator_in_X(double k) {
  const double kc = 1.0 - k * k;
  return make_polynomial<double>({-kc * kc, 0.0, 6.0 * kc, -4.0 * (2.0 - k * k), 3.0});
}

// Numerator of dn(3u)/x as a polynomial in X.
RealPolynomial dn3_numerator_in_X(double k) {
  const double k2 = k * k;
  const double k4 = k2 * k2;
  return make_polynomial<double>({6.0 * k2 - 3.0 - 3.0 * k4, -12.0 * k2 + 8.0 + 4.0 * k4, 6.0 * k2 - 6.0, 0.0, 1.0});
}

void keep_distinct(std::vector<Candidate>& out, Candidate c, double separation) {
  for (const Candidate& existing : out) {
    if (std::abs(existing.value - c.value) <= separation) return;
  }
  out.push_back(c);
}

CandidateSet finish(std::vector<Candidate> candidates) {
  CandidateSet set;
  set.candidates = std::move(candidates);
  set.status = set.candidates.empty() ? SearchStatus::kNoAdmissibleRoot : SearchStatus::kFound;
  return set;
}

CandidateSet underdetermined() {
  CandidateSet set;
  set.status = SearchStatus::kUnderdetermined;
  return set;
}

bool negligible(const RealPolynomial& p, double scale) {
  return max_abs_coefficient(p) <= 1e-14 * std::max(1.0, scale);
}

// Parameter candidates mu in (max(1 - x1^2, 0), 1) of a polynomial, certified
// by |dn(n dn^-1(x1, mu), mu) - target| < 1e-9.  Values reported as k.
CandidateSet modulus_candidates(const RealPolynomial& poly, double x1, int multiple, double target) {
  const double lo = std::max(0.0, (1.0 - x1) * (1.0 + x1));
  std::vector<Candidate> out;
  for (double mu : real_roots_in(poly, lo, 1.0)) {
    if (!(mu > 0.0 && mu < 1.0 - 1e-15)) continue;
    double u;
    try {
      u = inverse_dn(x1, mu);
    } catch (const DomainError&) {
      continue;
    }
    const double residual = std::abs(jacobi_sn_cn_dn(multiple * u, mu).dn - target);
    if (residual < kCertifyRoundTrip) keep_distinct(out, {std::sqrt(mu), residual, kNaN}, 1e-12);
  }
  return finish(std::move(out));
}

}  // namespace

std::string to_string(SolveMethod method) {
  switch (method) {
    case SolveMethod::kForwardIdentity:
      return "forward-identity";
    case SolveMethod::kInverseBisection:
      return "inverse-bisection";
    case SolveMethod::kDeflation:
      return "deflation";
  }
  return "unknown";
}

std::string to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::kFound:
      return "found";
    case SearchStatus::kNoAdmissibleRoot:
      return "no-admissible-root";
    case SearchStatus::kUnderdetermined:
      return "underdetermined";
  }
  return "unknown";
}

bool CandidateSet::contains(double value, double tolerance) const {
  return std::any_of(candidates.begin(), candidates.end(),
                     [&](const Candidate& c) { return std::abs(c.value - value) <= tolerance; });
}

std::complex<double> SolveCertificate::root_product() const {
  Complex product = root;
  for (const Complex& z : co_roots) product *= z;
  return product;
}

DeflationResult deflate_and_solve(const QuinticFamily<Complex>& f, Complex h, Complex known_root) {
  const ComplexPolynomial quintic = f.coefficients(h);
  const double known_residual = scaled_residual(quintic, known_root);
  if (!(known_residual < 1e-8)) {
    throw DomainError("deflate_and_solve: supplied root has residual " + std::to_string(known_residual));
  }
  DeflationResult result;
  result.ill_conditioned = known_residual > 1e-10;

  if (h == Complex(0.0)) {
    const ComplexPolynomial quartic = make_polynomial<Complex>({f.e, 0.0, f.c, 0.0, f.a});
    if (f.a == Complex(0.0)) throw DomainError("deflate_and_solve: h = 0 and a = 0, degree below four");
    result.degree_dropped = true;
    for (const Complex& z : solve_quartic(quartic)) {
      const Complex polished = newton_polish(quartic, z, 5);
      result.co_roots.push_back(polished);
      result.residuals.push_back(scaled_residual(quartic, polished));
    }
    return result;
  }

  const ComplexPolynomial quartic = deflate(quintic, known_root);
  for (const Complex& z : solve_quartic(quartic)) {
    const Complex polished = newton_polish(quintic, z, 5);
    result.co_roots.push_back(polished);
    result.residuals.push_back(scaled_residual(quintic, polished));
  }
  return result;
}

DeflationResult deflate_and_solve(const QuinticFamily<double>& f, double h, double known_root) {
  return deflate_and_solve(widen(f), Complex(h), Complex(known_root));
}

namespace {

SolveCertificate certify(const QuinticFamily<double>& family, double h, double k, SolveMethod method,
                         std::optional<double> m0) {
  SolveCertificate cert;
  cert.root = k;
  cert.residual = quintic_residual(family, h, k);
  cert.recovered_m0 = m0;
  cert.method = method;
  const DeflationResult rest = deflate_and_solve(family, h, k);
  cert.co_roots = rest.co_roots;
  cert.co_root_residuals = rest.residuals;
  cert.degree_dropped = rest.degree_dropped;
  cert.ill_conditioned = rest.ill_conditioned;
  return cert;
}

}  // namespace

SolveCertificate elliptic_root_forward(double u, double m) {
  if (!(m > 0.0 && m < 1.0)) throw DomainError("elliptic_root_forward: m must lie in (0, 1)");
  const double K = complete_K(m);
  if (!(u > 0.0 && u < K)) throw DomainError("elliptic_root_forward: u must lie in (0, K)");
  const double x = jacobi_sn_cn_dn(u, m).dn;
  const double h = jacobi_sn_cn_dn(3.0 * u, m).sn;
  return certify(build_family(x), h, std::sqrt(m), SolveMethod::kForwardIdentity, m);
}

CandidateSet recover_modulus(double x, double h) {
  if (x == 1.0 && h == 0.0) return underdetermined();
  if (!(x > 0.0 && x <= 1.0)) throw DomainError("recover_modulus: x must lie in (0, 1]");
  if (!(std::abs(h) <= 1.0)) throw DomainError("recover_modulus: h must lie in [-1, 1]");

  // u = dn^-1(x, m) ranges over [0, K]; sn(3u) = h is then the whole
  // condition (principal and non-principal branches of sn^-1 alike).
  const double lo = std::max((1.0 - x) * (1.0 + x), 1e-12);
  const double hi = 1.0 - 1e-12;
  const auto g = [x, h](double m) { return jacobi_sn_cn_dn(3.0 * inverse_dn(x, m), m).sn - h; };
  const QuinticFamily<double> family = build_family(x);
  std::vector<Candidate> out;
  for (double m0 : scan_roots(g, lo, hi, kScanGrid, 1e-14)) {
    const double residual = quintic_residual(family, h, std::sqrt(m0));
    if (residual < kCertifyQuintic) keep_distinct(out, {m0, residual, kNaN}, 1e-12);
  }
  return finish(std::move(out));
}

SolveCertificate certify_recovered(double x, double h, double m0) {
  return certify(build_family(x), h, std::sqrt(m0), SolveMethod::kInverseBisection, m0);
}

CandidateSet dn_third_from_quintic(const Modulus& k) {
  const RealPolynomial one_minus_X = make_polynomial<double>({1.0, -1.0});
  const RealPolynomial N = numerator_in_X(k.k());
  const RealPolynomial D = denominator_in_X(k.k());
  // (1 - X) N^2 - k^2 D^2 vanishes where sqrt(1 - X) N = +-k D.  The wanted
  // root is double (h = 1 is the maximum of sn), so roots of the derivative
  // are tried first; they locate a double root to full precision.
  const RealPolynomial squared = add<double>(multiply(one_minus_X, multiply(N, N)),
                                             -k.m() * multiply(D, D));
  const double lo = k.kprime() * k.kprime();
  std::vector<double> trial;
  for (double X : real_roots_in(derivative(squared), lo, 1.0)) {
    if (scaled_residual(squared, X) < 1e-12) trial.push_back(X);
  }
  for (double X : real_roots_in(squared, lo, 1.0, 1e-4)) trial.push_back(X);

  std::vector<Candidate> out;
  for (double X : trial) {
    const double x = std::sqrt(X);
    const double residual = quintic_residual(build_family(x), 1.0, k.k());
    if (residual < kCertifyRoundTrip) keep_distinct(out, {x, residual, kNaN}, 1e-6);
  }
  const double direct = jacobi_sn_cn_dn(complete_K(k.m()) / 3.0, k.m()).dn;
  std::stable_sort(out.begin(), out.end(), [direct](const Candidate& a, const Candidate& b) {
    return std::abs(a.value - direct) < std::abs(b.value - direct);
  });
  return finish(std::move(out));
}

CandidateSet dn3u_from_ratio(double lambda, const Modulus& k) {
  if (!(lambda > 0.0)) throw DomainError("dn3u_from_ratio: lambda must be positive");
  // y (-D(X)) = x Nd(X) with x = lambda y, X = lambda^2 y^2; divide by y and
  // write the result in Z = y^2.
  const RealPolynomial minus_D = -denominator_in_X(k.k());
  const RealPolynomial equation =
      rescale_argument<double>(add<double>(minus_D, -lambda * dn3_numerator_in_X(k.k())), lambda * lambda);
  const double kp = k.kprime();
  std::vector<Candidate> out;
  for (double Z : real_roots_in(equation, kp * kp, 1.0)) {
    const double y = std::sqrt(Z);
    const double x = lambda * y;
    if (x < kp - 1e-12 || x > 1.0 + 1e-12) continue;
    const double residual = std::abs(triplication(std::clamp(x, kp, 1.0), k.k()).dn - y);
    if (residual < kCertifyRoundTrip) keep_distinct(out, {y, residual, x}, 1e-12);
  }
  return finish(std::move(out));
}

CandidateSet modulus_from_dn_pair(double x1, double x3) {
  if (!(x1 > 0.0 && x1 <= 1.0 && x3 > 0.0 && x3 <= 1.0)) {
    throw DomainError("modulus_from_dn_pair: dn values must lie in (0, 1]");
  }
  if (x1 == 1.0 && x3 == 1.0) return underdetermined();
  // x3 (-D) - x1 Nd as a quadratic in mu = k^2.
  const double X = x1 * x1;
  const double X2 = X * X;
  const double X3 = X2 * X;
  const double v = X - 1.0;
  const RealPolynomial equation = make_polynomial<double>(
      {x3 * (1.0 - 6.0 * X2 + 8.0 * X3 - 3.0 * X2 * X2) - x1 * v * v * v * (X + 3.0),
       x3 * (-2.0 + 6.0 * X2 - 4.0 * X3) - x1 * 6.0 * v * v, x3 - x1 * (4.0 * X - 3.0)});
  if (negligible(equation, 1.0)) return underdetermined();
  return modulus_candidates(trim(equation, 1e-15), x1, 3, x3);
}

CandidateSet modulus_from_dn_dn4(double x1, double x4) {
  if (!(x1 > 0.0 && x1 <= 1.0 && x4 > 0.0 && x4 <= 1.0)) {
    throw DomainError("modulus_from_dn_dn4: dn values must lie in (0, 1]");
  }
  if (x1 == 1.0 && x4 == 1.0) return underdetermined();
  // dn(2u) = A/B, both linear in mu; dn(4u) is the same map applied to
  // Y = A^2/B^2.  Clearing B^4 leaves a quintic in mu.
  const double X = x1 * x1;
  const double w = 1.0 - X;
  const RealPolynomial A = make_polynomial<double>({w * w, -(1.0 - 2.0 * X)});
  const RealPolynomial B = make_polynomial<double>({-w * w, 1.0});
  const RealPolynomial mu = make_polynomial<double>({0.0, 1.0});
  const RealPolynomial A2 = multiply(A, A);
  const RealPolynomial B2 = multiply(B, B);
  const RealPolynomial S = add<double>(B2, -A2);
  const RealPolynomial S2 = multiply(S, S);
  const RealPolynomial numerator = add<double>(S2, -multiply(mu, multiply(B2, add<double>(B2, -2.0 * A2))));
  const RealPolynomial denominator = add<double>(multiply(mu, multiply(B2, B2)), -S2);
  const RealPolynomial equation = add<double>(numerator, -x4 * denominator);
  if (negligible(equation, 1.0)) return underdetermined();
  return modulus_candidates(trim(equation, 1e-15), x1, 4, x4);
}

double sd_condition_target(double x) {
  const double x2 = x * x;
  return 1.0 - 9.0 * x2 + 24.0 * x2 * x2 - 16.0 * x2 * x2 * x2;
}

CandidateSet modulus_from_sd_condition(double x) {
  if (!(x > 0.0 && x <= 1.0)) throw DomainError("modulus_from_sd_condition: x must lie in (0, 1]");
  if (x == 1.0) return underdetermined();
  const double target = sd_condition_target(x);
  const double lo = std::max(std::sqrt((1.0 - x) * (1.0 + x)), 1e-9);
  const double hi = 1.0 - 1e-12;
  // x is clamped into [k', 1] to absorb rounding at the lower end of the scan.
  const auto g = [x, target](double k) {
    try {
      return sd_triple(std::max(x, std::sqrt((1.0 - k) * (1.0 + k))), k) - target;
    } catch (const SingularDenominator&) {
      return kNaN;
    }
  };
  std::vector<Candidate> out;
  for (double k : scan_roots(g, lo, hi, kScanGrid, 1e-14)) {
    const double residual = std::abs(g(k));
    if (residual < kCertifyRoundTrip) keep_distinct(out, {k, residual, kNaN}, 1e-12);
  }
  return finish(std::move(out));
}

}  // namespace quintell
