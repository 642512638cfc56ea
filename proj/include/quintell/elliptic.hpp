#pragma once

// Real-domain complete and incomplete elliptic integrals of the first kind,
// Jacobi elliptic functions and their inverses, plus the Fourier (nome)
// series and theta-function routes used as independent cross-checks.
//
// Conventions: functions take the parameter m = k^2, never the modulus k,
// unless the argument is a Modulus.  All evaluation is binary64; the
// documented accuracy holds on m in [1e-6, 1 - 1e-6].

#include <cmath>
#include <complex>
#include <numbers>

namespace quintell {

/// Elliptic modulus k in (0, 1) together with m = k^2 and k' = sqrt(1 - k^2).
class Modulus {
 public:
  static Modulus from_k(double k);
  static Modulus from_parameter(double m);

  double k() const { return k_; }
  double m() const { return m_; }
  double kprime() const { return kprime_; }

 private:
  Modulus(double k, double m, double kprime) : k_(k), m_(m), kprime_(kprime) {}

  double k_;
  double m_;
  double kprime_;
};

/// (sn, cn, dn) at a common argument.  Scalar is double in the real regime
/// and std::complex<double> where the closed forms are continued
/// algebraically.
template <typename Scalar>
struct Triple {
  Scalar sn;
  Scalar cn;
  Scalar dn;
};

using JacobiTriple = Triple<double>;
using ComplexTriple = Triple<std::complex<double>>;

/// An argument u with its normalized angle z = pi u / (2K) and amplitude am(u).
struct EllipticPoint {
  double u;
  double z;
  double amplitude;
};

/// K(m) by the arithmetic-geometric mean.
double complete_K(double m);

/// K(m) = (pi/2) 2F1(1/2, 1/2; 1; m) summed term by term.  With terms < 0 the
/// sum runs until a term drops below 1e-18 (cap 100000); otherwise exactly
/// `terms` terms are added.  Independent of the AGM route.
double hypergeometric_K(double m, int terms = -1);

/// F(phi | m); phi outside [-pi/2, pi/2] is reduced with F(phi + pi) = F(phi) + 2K.
double incomplete_F(double phi, double m);

/// sn, cn, dn by descending Landen (AGM) transformation after reducing u into
/// the first quarter period.
JacobiTriple jacobi_sn_cn_dn(double u, double m);

/// am(u | m), continuous in u.
double jacobi_am(double u, double m);

EllipticPoint elliptic_point(double u, double m);

/// Residuals of sn^2 + cn^2 = 1 and m sn^2 + dn^2 = 1, largest magnitude.
double pythagorean_defect(const JacobiTriple& t, double m);

// Fourier series in the nome q = exp(-pi K(1-m)/K(m)), z = pi u / (2K).
// Terms are added until the coefficient magnitude drops below 1e-17; 400
// terms without meeting the bound raise ConvergenceError.
double qseries_sn(double u, double m);
double qseries_cn(double u, double m);
double qseries_dn(double u, double m);

/// The cn series with denominator 1 + q^(2n-1) in place of 1 + q^(2n+1).
/// Kept only so the misprinted form can be measured against qseries_cn.
double qseries_cn_misprinted(double u, double m);

/// u in [-K, K] with sn(u) = s, i.e. F(arcsin s | m).
double inverse_sn(double s, double m);

/// u in [0, K] with dn(u) = x for k' <= x <= 1.
double inverse_dn(double x, double m);

/// q = exp(-pi K(1-m)/K(m)).
double nome_from_modulus(double m);

/// Inverse nome via k = theta2(q)^2 / theta3(q)^2.
Modulus modulus_from_nome(double q);

}  // namespace quintell
