#pragma once

// Dense univariate polynomials as Eigen column vectors of coefficients,
// constant term first.  Everything here is templated on the coefficient
// scalar so real and complex families share one code path.

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <vector>

namespace quintell {

template <typename Scalar>
using Polynomial = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RealPolynomial = Polynomial<double>;
using ComplexPolynomial = Polynomial<std::complex<double>>;

template <typename Scalar>
Polynomial<Scalar> make_polynomial(std::initializer_list<Scalar> ascending) {
  Polynomial<Scalar> p(static_cast<Eigen::Index>(ascending.size()));
  Eigen::Index i = 0;
  for (const Scalar& c : ascending) p(i++) = c;
  return p;
}

/// Horner evaluation; the argument may be of a wider type than the coefficients.
template <typename Derived, typename T>
auto evaluate(const Eigen::MatrixBase<Derived>& p, const T& x) {
  using Result = decltype(typename Derived::Scalar{} * x);
  Result acc{};
  for (Eigen::Index i = p.size() - 1; i >= 0; --i) acc = acc * x + p(i);
  return acc;
}

template <typename Scalar>
Polynomial<Scalar> multiply(const Polynomial<Scalar>& p, const Polynomial<Scalar>& q) {
  Polynomial<Scalar> r = Polynomial<Scalar>::Zero(p.size() + q.size() - 1);
  for (Eigen::Index i = 0; i < p.size(); ++i) r.segment(i, q.size()) += p(i) * q;
  return r;
}

template <typename Scalar>
Polynomial<Scalar> add(const Polynomial<Scalar>& p, const Polynomial<Scalar>& q) {
  Polynomial<Scalar> r = Polynomial<Scalar>::Zero(std::max(p.size(), q.size()));
  r.head(p.size()) += p;
  r.head(q.size()) += q;
  return r;
}

template <typename Scalar>
Polynomial<Scalar> derivative(const Polynomial<Scalar>& p) {
  if (p.size() <= 1) return Polynomial<Scalar>::Zero(1);
  Polynomial<Scalar> d(p.size() - 1);
  for (Eigen::Index i = 1; i < p.size(); ++i) d(i - 1) = static_cast<double>(i) * p(i);
  return d;
}

/// p(scale * t) as a polynomial in t.
template <typename Scalar>
Polynomial<Scalar> rescale_argument(const Polynomial<Scalar>& p, Scalar scale) {
  Polynomial<Scalar> r = p;
  Scalar power{1};
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    r(i) *= power;
    power *= scale;
  }
  return r;
}

template <typename Scalar>
double max_abs_coefficient(const Polynomial<Scalar>& p) {
  return p.size() == 0 ? 0.0 : p.cwiseAbs().maxCoeff();
}

/// Drops leading coefficients whose magnitude is at most `tolerance` times
/// the largest one.  Always keeps at least the constant term.
template <typename Scalar>
Polynomial<Scalar> trim(const Polynomial<Scalar>& p, double tolerance = 0.0) {
  const double bound = tolerance * max_abs_coefficient(p);
  Eigen::Index n = p.size();
  while (n > 1 && std::abs(p(n - 1)) <= bound) --n;
  return p.head(n);
}

/// Synthetic division by (x - root).  Returns the quotient; the remainder is
/// written to *remainder when given.
template <typename Scalar>
Polynomial<Scalar> deflate(const Polynomial<Scalar>& p, Scalar root, Scalar* remainder = nullptr) {
  const Eigen::Index n = p.size() - 1;
  Polynomial<Scalar> q(std::max<Eigen::Index>(n, 1));
  Scalar carry = p(n);
  for (Eigen::Index i = n - 1; i >= 0; --i) {
    q(i) = carry;
    carry = p(i) + carry * root;
  }
  if (remainder) *remainder = carry;
  return q;
}

/// |p(z)| relative to the size of the terms being summed,
/// max|c_i| * max(1, |z|)^deg.  Equals |p(z)| / max|c_i| for |z| <= 1.
template <typename Scalar, typename T>
double scaled_residual(const Polynomial<Scalar>& p, const T& z) {
  const double size = max_abs_coefficient(p);
  if (size == 0.0) return 0.0;
  const double growth = std::pow(std::max(1.0, std::abs(z)), static_cast<double>(p.size() - 1));
  return std::abs(evaluate(p, z)) / (size * growth);
}

/// Newton steps on p, keeping an iterate only while it lowers |p|.
template <typename Scalar, typename T>
T newton_polish(const Polynomial<Scalar>& p, T z, int max_steps) {
  const Polynomial<Scalar> dp = derivative(p);
  double best = std::abs(evaluate(p, z));
  for (int i = 0; i < max_steps && best > 0.0; ++i) {
    const auto slope = evaluate(dp, z);
    if (std::abs(slope) == 0.0) break;
    const T next = z - T(evaluate(p, z) / slope);
    const double value = std::abs(evaluate(p, next));
    if (!(value < best)) break;
    z = next;
    best = value;
  }
  return z;
}

/// All complex roots as eigenvalues of the companion matrix, each polished by
/// a few Newton steps.  Leading zeros are trimmed first.
std::vector<std::complex<double>> polynomial_roots(const RealPolynomial& p);
std::vector<std::complex<double>> polynomial_roots(const ComplexPolynomial& p);

/// Real roots in [lo, hi] (with relative slack 1e-9 on the bounds).  A
/// companion eigenvalue counts as real when its imaginary part is below
/// `imag_tolerance` * max(1, |z|); it is then refined by Newton on p.
std::vector<double> real_roots_in(const RealPolynomial& p, double lo, double hi,
                                  double imag_tolerance = 1e-7);

/// Roots of a cubic c0 + c1 x + c2 x^2 + c3 x^3 by the Cardano formula.
std::array<std::complex<double>, 3> solve_cubic(const ComplexPolynomial& p);

/// Roots of a quartic by reduction to its resolvent cubic (Ferrari).
std::array<std::complex<double>, 4> solve_quartic(const ComplexPolynomial& p);

}  // namespace quintell
