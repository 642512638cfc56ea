#pragma once

// Duplication and triplication of Jacobi functions written in terms of
// x = dn(u) and the modulus k, plus the addition formulas that serve as
// their composition oracle.
//
// The closed forms are algebraic in (x, k).  The templates accept double or
// std::complex<double>; with complex scalars every square root is the
// principal one and only denominators are validated.  The double overloads
// taking a Modulus are the real-regime entry points and require
// k' <= x <= 1.

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <type_traits>

#include "quintell/elliptic.hpp"
#include "quintell/errors.hpp"

namespace quintell {

inline constexpr double kDenominatorFloor = 1e-13;

namespace detail {

template <typename Scalar>
void require_nonsingular(const Scalar& denominator, const char* where) {
  if (!(std::abs(denominator) > kDenominatorFloor)) {
    throw SingularDenominator(std::string(where) + ": denominator vanishes");
  }
}

// sqrt that clamps tiny negative rounding in the real regime.
inline double regime_sqrt(double v) { return std::sqrt(std::max(0.0, v)); }
inline std::complex<double> regime_sqrt(const std::complex<double>& v) { return std::sqrt(v); }

}  // namespace detail

/// x = dn(u) together with cn(u) = sqrt(k^2 + x^2 - 1)/k and
/// sn(u) = sqrt(1 - x^2)/k, the branch that holds for u in [0, K].
template <typename Scalar>
struct DnParametrization {
  Scalar x;
  Scalar k;
  Scalar alpha;  // cn(u)
  Scalar beta;   // sn(u)
  bool real_regime;

  Triple<Scalar> triple() const { return {beta, alpha, x}; }
};

template <typename Scalar>
DnParametrization<Scalar> parametrize_dn(const Scalar& x, const Scalar& k) {
  detail::require_nonsingular(k, "parametrize_dn");
  const Scalar one{1.0};
  DnParametrization<Scalar> p{x, k, detail::regime_sqrt(k * k + x * x - one) / k,
                              detail::regime_sqrt(one - x * x) / k, false};
  if constexpr (std::is_floating_point_v<Scalar>) {
    const double kprime = std::sqrt((1.0 - k) * (1.0 + k));
    p.real_regime = k > 0.0 && k < 1.0 && x >= kprime - 1e-15 && x <= 1.0 + 1e-15;
  } else {
    const bool real_inputs = x.imag() == 0.0 && k.imag() == 0.0;
    const double kr = k.real();
    p.real_regime = real_inputs && kr > 0.0 && kr < 1.0 &&
                    x.real() >= std::sqrt((1.0 - kr) * (1.0 + kr)) - 1e-15 && x.real() <= 1.0 + 1e-15;
  }
  return p;
}

// Addition formulas.  All three share the denominator 1 - k^2 sn1^2 sn2^2.

template <typename Scalar>
Scalar addition_denominator(const Triple<Scalar>& t1, const Triple<Scalar>& t2, const Scalar& k) {
  const Scalar denom = Scalar{1.0} - k * k * t1.sn * t1.sn * t2.sn * t2.sn;
  detail::require_nonsingular(denom, "addition formula");
  return denom;
}

template <typename Scalar>
Scalar addition_sn(const Triple<Scalar>& t1, const Triple<Scalar>& t2, const Scalar& k) {
  return (t1.sn * t2.cn * t2.dn + t2.sn * t1.cn * t1.dn) / addition_denominator(t1, t2, k);
}

template <typename Scalar>
Scalar addition_cn(const Triple<Scalar>& t1, const Triple<Scalar>& t2, const Scalar& k) {
  return (t1.cn * t2.cn - t1.sn * t2.sn * t1.dn * t2.dn) / addition_denominator(t1, t2, k);
}

template <typename Scalar>
Scalar addition_dn(const Triple<Scalar>& t1, const Triple<Scalar>& t2, const Scalar& k) {
  return (t1.dn * t2.dn - k * k * t1.sn * t2.sn * t1.cn * t2.cn) / addition_denominator(t1, t2, k);
}

/// The triple at u1 + u2 from the triples at u1 and u2.
template <typename Scalar>
Triple<Scalar> add_triples(const Triple<Scalar>& t1, const Triple<Scalar>& t2, const Scalar& k) {
  return {addition_sn(t1, t2, k), addition_cn(t1, t2, k), addition_dn(t1, t2, k)};
}

/// Composition oracle: the triple at n*u built by repeated addition from the
/// triple at u (n >= 1).
template <typename Scalar>
Triple<Scalar> multiple_by_addition(const Triple<Scalar>& t, int n, const Scalar& k) {
  Triple<Scalar> acc = t;
  for (int i = 1; i < n; ++i) acc = add_triples(acc, t, k);
  return acc;
}

/// sn, cn, dn at 2u from x = dn(u).
template <typename Scalar>
Triple<Scalar> duplication(const Scalar& x, const Scalar& k) {
  const Scalar one{1.0};
  const Scalar X = x * x;
  const Scalar w = one - X;
  const Scalar k2 = k * k;
  const Scalar denom = k2 - w * w;
  detail::require_nonsingular(denom, "duplication");
  const Scalar sn = Scalar{2.0} * x * detail::regime_sqrt(w) * detail::regime_sqrt(k2 + X - one) / denom;
  const Scalar cn = (k2 + X * X - one) / denom;
  const Scalar dn = (w * w - k2 * (one - Scalar{2.0} * X)) / denom;
  return {sn, cn, dn};
}

/// The denominator shared by sn(3u), cn(3u) and dn(3u), as a function of
/// X = dn(u)^2:  -(1-k^2)^2 + 6(1-k^2)X^2 - 4(2-k^2)X^3 + 3X^4.
template <typename Scalar>
Scalar triplication_denominator(const Scalar& X, const Scalar& k) {
  const Scalar one{1.0};
  const Scalar k2 = k * k;
  const Scalar kc = one - k2;
  const Scalar X2 = X * X;
  return -kc * kc + Scalar{6.0} * kc * X2 - Scalar{4.0} * (Scalar{2.0} - k2) * X2 * X + Scalar{3.0} * X2 * X2;
}

/// Numerator of sn(3u) without the sqrt(1 - x^2)/k factor:
/// k^4 (1 - 4X) + (1 - X)^4 + k^2 (-2 + 8X - 6X^2).
template <typename Scalar>
Scalar triplication_sn_numerator(const Scalar& X, const Scalar& k) {
  const Scalar one{1.0};
  const Scalar k2 = k * k;
  const Scalar w = one - X;
  return k2 * k2 * (one - Scalar{4.0} * X) + w * w * w * w +
         k2 * (Scalar{-2.0} + Scalar{8.0} * X - Scalar{6.0} * X * X);
}

/// Numerator of dn(3u) without the factor x:
/// 6k^2 (X - 1)^2 + (X - 1)^3 (3 + X) + k^4 (4X - 3).
template <typename Scalar>
Scalar triplication_dn_numerator(const Scalar& X, const Scalar& k) {
  const Scalar one{1.0};
  const Scalar k2 = k * k;
  const Scalar v = X - one;
  return Scalar{6.0} * k2 * v * v + v * v * v * (Scalar{3.0} + X) + k2 * k2 * (Scalar{4.0} * X - Scalar{3.0});
}

/// sn, cn, dn at 3u from x = dn(u).  All three components are divided by the
/// shared denominator D (dn by -D).
template <typename Scalar>
Triple<Scalar> triplication(const Scalar& x, const Scalar& k) {
  const Scalar one{1.0};
  const Scalar X = x * x;
  const Scalar D = triplication_denominator(X, k);
  detail::require_nonsingular(D, "triplication");
  detail::require_nonsingular(k, "triplication");
  const Scalar k2 = k * k;
  const Scalar sn = detail::regime_sqrt(one - X) / k * triplication_sn_numerator(X, k) / D;
  const Scalar v = X - one;
  const Scalar cn_numerator =
      detail::regime_sqrt(k2 + X - one) *
      (k2 * k2 + v * v * v * v + k2 * (Scalar{-2.0} + Scalar{4.0} * X - Scalar{6.0} * X * X + Scalar{4.0} * X * X * X));
  const Scalar cn = cn_numerator / (-k * D);
  const Scalar dn = x * triplication_dn_numerator(X, k) / (-D);
  return {sn, cn, dn};
}

/// dn(3u) with the denominator (k^2-1)^2 + 6(k^2-1)x^4 + 8x^6 - 7x^8 in
/// place of -D.  This variant does not agree with the composition oracle;
/// it exists so the discrepancy can be measured.
template <typename Scalar>
Scalar triplication_dn_misprinted(const Scalar& x, const Scalar& k) {
  const Scalar one{1.0};
  const Scalar X = x * x;
  const Scalar kc = k * k - one;
  const Scalar denom = kc * kc + Scalar{6.0} * kc * X * X + Scalar{8.0} * X * X * X - Scalar{7.0} * X * X * X * X;
  detail::require_nonsingular(denom, "triplication_dn_misprinted");
  return x * triplication_dn_numerator(X, k) / denom;
}

/// dn(4u) from x = dn(u) by applying the dn duplication formula twice.
template <typename Scalar>
Scalar dn_quadruple(const Scalar& x, const Scalar& k) {
  return duplication(duplication(x, k).dn, k).dn;
}

/// sd(3u) = sn(3u)/dn(3u) from x = dn(u).
template <typename Scalar>
Scalar sd_triple(const Scalar& x, const Scalar& k) {
  const Triple<Scalar> t = triplication(x, k);
  detail::require_nonsingular(t.dn, "sd_3u");
  return t.sn / t.dn;
}

// Real-regime entry points.  These validate k' <= x <= 1 and raise
// DomainError otherwise.

JacobiTriple duplication_from_dn(double x, const Modulus& k);
JacobiTriple triplication_from_dn(double x, const Modulus& k);
double dn_4u_from_dn(double x, const Modulus& k);
double sd_3u(double x, const Modulus& k);

/// Triple at u from x = dn(u), u in [0, K].
JacobiTriple triple_from_dn(double x, const Modulus& k);

double addition_sn(const JacobiTriple& t1, const JacobiTriple& t2, const Modulus& k);
double addition_cn(const JacobiTriple& t1, const JacobiTriple& t2, const Modulus& k);
double addition_dn(const JacobiTriple& t1, const JacobiTriple& t2, const Modulus& k);

}  // namespace quintell
