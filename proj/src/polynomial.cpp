#include "quintell/polynomial.hpp"

#include "quintell/errors.hpp"

namespace quintell {

namespace {

using Complex = std::complex<double>;

template <typename Scalar, typename Solver>
std::vector<Complex> companion_roots(const Polynomial<Scalar>& raw) {
  const Polynomial<Scalar> p = trim(raw);
  const Eigen::Index n = p.size() - 1;
  std::vector<Complex> roots;
  if (n < 1) return roots;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  Matrix companion = Matrix::Zero(n, n);
  companion.diagonal(-1).setOnes();
  companion.col(n - 1) = -p.head(n) / p(n);
  Solver solver(companion, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceError("polynomial_roots: companion eigenvalue iteration failed");
  }
  const Eigen::VectorXcd values = solver.eigenvalues();
  roots.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    roots.push_back(newton_polish(p, Complex(values(i)), 3));
  }
  return roots;
}

}  // namespace

std::vector<std::complex<double>> polynomial_roots(const RealPolynomial& p) {
  return companion_roots<double, Eigen::EigenSolver<Eigen::MatrixXd>>(p);
}

std::vector<std::complex<double>> polynomial_roots(const ComplexPolynomial& p) {
  return companion_roots<Complex, Eigen::ComplexEigenSolver<Eigen::MatrixXcd>>(p);
}

std::vector<double> real_roots_in(const RealPolynomial& p, double lo, double hi,
                                  double imag_tolerance) {
  std::vector<double> out;
  const double slack = 1e-9 * std::max({1.0, std::abs(lo), std::abs(hi)});
  for (const Complex& z : polynomial_roots(p)) {
    if (std::abs(z.imag()) > imag_tolerance * std::max(1.0, std::abs(z))) continue;
    const double x = newton_polish(p, z.real(), 8);
    if (x < lo - slack || x > hi + slack) continue;
    out.push_back(std::clamp(x, lo, hi));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::array<std::complex<double>, 3> solve_cubic(const ComplexPolynomial& p) {
  if (p.size() != 4 || p(3) == Complex(0.0)) {
    throw DomainError("solve_cubic: expected four coefficients with nonzero leading term");
  }
  const Complex a = p(2) / p(3);
  const Complex b = p(1) / p(3);
  const Complex c = p(0) / p(3);
  // t = x + a/3 gives t^3 + P t + Q.
  const Complex delta0 = a * a - 3.0 * b;
  const Complex delta1 = 2.0 * a * a * a - 9.0 * a * b + 27.0 * c;
  const Complex disc = std::sqrt(delta1 * delta1 - 4.0 * delta0 * delta0 * delta0);
  Complex big = std::abs(delta1 + disc) >= std::abs(delta1 - disc) ? delta1 + disc : delta1 - disc;
  std::array<Complex, 3> roots;
  if (std::abs(big) == 0.0) {
    roots.fill(-a / 3.0);
    return roots;
  }
  const Complex C = std::pow(0.5 * big, 1.0 / 3.0);
  const Complex xi(-0.5, 0.5 * std::sqrt(3.0));
  Complex rotation(1.0, 0.0);
  for (auto& root : roots) {
    const Complex Ck = rotation * C;
    root = -(a + Ck + delta0 / Ck) / 3.0;
    rotation *= xi;
  }
  return roots;
}

std::array<std::complex<double>, 4> solve_quartic(const ComplexPolynomial& p) {
  if (p.size() != 5 || p(4) == Complex(0.0)) {
    throw DomainError("solve_quartic: expected five coefficients with nonzero leading term");
  }
  const Complex a = p(3) / p(4);
  const Complex b = p(2) / p(4);
  const Complex c = p(1) / p(4);
  const Complex d = p(0) / p(4);
  // x = y - a/4 gives y^4 + P y^2 + Q y + R.
  const Complex P = b - 3.0 * a * a / 8.0;
  const Complex Q = c - a * b / 2.0 + a * a * a / 8.0;
  const Complex R = d - a * c / 4.0 + a * a * b / 16.0 - 3.0 * a * a * a * a / 256.0;
  const Complex shift = -a / 4.0;
  std::array<Complex, 4> roots;

  if (std::abs(Q) <= 1e-14 * std::max({1.0, std::abs(P), std::abs(R)})) {
    const Complex s = std::sqrt(P * P - 4.0 * R);
    const Complex y1 = std::sqrt((-P + s) / 2.0);
    const Complex y2 = std::sqrt((-P - s) / 2.0);
    roots = {shift + y1, shift - y1, shift + y2, shift - y2};
    return roots;
  }

  // Resolvent cubic 8 t^3 + 8 P t^2 + (2 P^2 - 8 R) t - Q^2 = 0; any nonzero
  // root splits the quartic into two quadratics.  The largest root keeps
  // the division by sqrt(2 t) well conditioned.
  const auto resolvent = solve_cubic(
      make_polynomial<Complex>({-Q * Q, 2.0 * P * P - 8.0 * R, 8.0 * P, Complex(8.0)}));
  Complex t = resolvent[0];
  for (const Complex& r : resolvent) {
    if (std::abs(r) > std::abs(t)) t = r;
  }
  const Complex w = std::sqrt(2.0 * t);
  const Complex plus = std::sqrt(-(2.0 * P + 2.0 * t + 2.0 * Q / w));
  const Complex minus = std::sqrt(-(2.0 * P + 2.0 * t - 2.0 * Q / w));
  roots = {shift + (w + plus) / 2.0, shift + (w - plus) / 2.0, shift + (-w + minus) / 2.0,
           shift + (-w - minus) / 2.0};
  return roots;
}

}  // namespace quintell
