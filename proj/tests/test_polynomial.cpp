#include <algorithm>
#include <complex>

#include "doctest.h"
#include "quintell/bracketing.hpp"
#include "quintell/errors.hpp"
#include "quintell/polynomial.hpp"
#include "support.hpp"

using namespace quintell;
using cd = std::complex<double>;

namespace {

// Monic polynomial with the given roots, built by repeated multiplication.
ComplexPolynomial from_roots(const std::vector<cd>& roots) {
  ComplexPolynomial p = make_polynomial<cd>({cd(1.0)});
  for (const cd& r : roots) p = multiply(p, make_polynomial<cd>({-r, cd(1.0)}));
  return p;
}

double nearest(const std::vector<cd>& found, cd want) {
  double best = 1e300;
  for (const cd& z : found) best = std::min(best, std::abs(z - want));
  return best;
}

}  // namespace

TEST_CASE("evaluate, multiply, derivative") {
  const RealPolynomial p = make_polynomial<double>({1.0, -3.0, 2.0});
  CHECK(evaluate(p, 2.0) == doctest::Approx(3.0));
  const RealPolynomial q = multiply(p, make_polynomial<double>({0.0, 1.0}));
  CHECK(q.size() == 4);
  CHECK(q(3) == 2.0);
  const RealPolynomial dp = derivative(p);
  CHECK(dp(0) == -3.0);
  CHECK(dp(1) == 4.0);
}

TEST_CASE("deflation by a known root leaves no remainder") {
  const RealPolynomial p = make_polynomial<double>({-6.0, 11.0, -6.0, 1.0});
  double remainder = 1.0;
  const RealPolynomial q = deflate(p, 1.0, &remainder);
  CHECK(remainder == doctest::Approx(0.0));
  CHECK(q.size() == 3);
  CHECK(evaluate(q, 2.0) == doctest::Approx(0.0));
}

TEST_CASE("Cardano and resolvent-cubic solvers recover planted roots") {
  testing::Rng rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<cd> roots;
    for (int i = 0; i < 4; ++i) {
      roots.emplace_back(testing::uniform(rng, -3, 3), i % 2 == 0 ? 0.0 : testing::uniform(rng, -2, 2));
    }
    const std::vector<cd> cubic_roots(roots.begin(), roots.begin() + 3);
    const auto c3 = solve_cubic(from_roots(cubic_roots));
    for (const cd& r : cubic_roots) CHECK(nearest({c3.begin(), c3.end()}, r) < 1e-6);
    const auto c4 = solve_quartic(from_roots(roots));
    for (const cd& r : roots) CHECK(nearest({c4.begin(), c4.end()}, r) < 1e-5);
  }
}

TEST_CASE("companion roots and real-root filtering") {
  const RealPolynomial p = make_polynomial<double>({-6.0, 11.0, -6.0, 1.0});
  const auto roots = polynomial_roots(p);
  CHECK(roots.size() == 3);
  const std::vector<double> real = real_roots_in(make_polynomial<double>({-6.0, 11.0, -6.0, 1.0}), 1.5, 3.5);
  REQUIRE(real.size() == 2);
  CHECK(std::min(real[0], real[1]) == doctest::Approx(2.0));
  CHECK(std::max(real[0], real[1]) == doctest::Approx(3.0));
  // x^2 + 1 has no real roots.
  CHECK(real_roots_in(make_polynomial<double>({1.0, 0.0, 1.0}), -5.0, 5.0).empty());
}

TEST_CASE("scaled residual is invariant under scaling the coefficients") {
  const RealPolynomial p = make_polynomial<double>({1.0, 2.0, -1.0});
  CHECK(scaled_residual(p, 0.7) == doctest::Approx(scaled_residual(RealPolynomial(1e6 * p), 0.7)));
}

TEST_CASE("scan and bisection") {
  const auto roots = scan_roots([](double x) { return std::sin(x); }, 0.5, 10.0, 100, 1e-14);
  REQUIRE(roots.size() == 3);
  CHECK(roots[0] == doctest::Approx(M_PI).epsilon(1e-13));
  CHECK(roots[2] == doctest::Approx(3 * M_PI).epsilon(1e-13));
  CHECK(bisect([](double x) { return x * x - 2.0; }, 0.0, 2.0, 1e-15) == doctest::Approx(std::sqrt(2.0)));
  CHECK_THROWS_AS(bisect([](double x) { return x * x + 1.0; }, 0.0, 2.0, 1e-15), DomainError);
}
