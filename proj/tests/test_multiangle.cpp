#include <cmath>
#include <complex>

#include "doctest.h"
#include "quintell/elliptic.hpp"
#include "quintell/errors.hpp"
#include "quintell/multiangle.hpp"
#include "support.hpp"

using namespace quintell;

TEST_CASE("duplication and triplication from dn(u) match direct evaluation at 2u and 3u") {
  testing::Rng rng(31);
  for (int i = 0; i < 300; ++i) {
    const testing::Point p = testing::random_point(rng);
    const Modulus k = Modulus::from_parameter(p.m);
    const double x = jacobi_sn_cn_dn(p.u, p.m).dn;
    const JacobiTriple d2 = jacobi_sn_cn_dn(2 * p.u, p.m);
    const JacobiTriple d3 = jacobi_sn_cn_dn(3 * p.u, p.m);
    const JacobiTriple dup = duplication_from_dn(x, k);
    const JacobiTriple tri = triplication_from_dn(x, k);
    CAPTURE(p.m);
    CAPTURE(p.u);
    CHECK(std::abs(dup.sn - d2.sn) < 1e-10);
    CHECK(std::abs(dup.cn - d2.cn) < 1e-10);
    CHECK(std::abs(dup.dn - d2.dn) < 1e-10);
    CHECK(std::abs(tri.sn - d3.sn) < 1e-9);
    CHECK(std::abs(tri.cn - d3.cn) < 1e-9);
    CHECK(std::abs(tri.dn - d3.dn) < 1e-9);
    CHECK(std::abs(dn_4u_from_dn(x, k) - jacobi_sn_cn_dn(4 * p.u, p.m).dn) < 1e-9);
  }
}

TEST_CASE("addition formulas agree with direct evaluation at u + v") {
  testing::Rng rng(32);
  for (int i = 0; i < 200; ++i) {
    const double m = testing::uniform(rng, 0.01, 0.99);
    const double u = testing::uniform(rng, -3, 3);
    const double v = testing::uniform(rng, -3, 3);
    const Modulus k = Modulus::from_parameter(m);
    const JacobiTriple a = jacobi_sn_cn_dn(u, m);
    const JacobiTriple b = jacobi_sn_cn_dn(v, m);
    const JacobiTriple s = jacobi_sn_cn_dn(u + v, m);
    CHECK(std::abs(addition_sn(a, b, k) - s.sn) < 1e-12);
    CHECK(std::abs(addition_cn(a, b, k) - s.cn) < 1e-12);
    CHECK(std::abs(addition_dn(a, b, k) - s.dn) < 1e-12);
  }
}

TEST_CASE("the printed dn(3u) denominator disagrees, the shared one agrees") {
  const double m = 0.4;
  const double k = std::sqrt(m);
  const double u = 0.5;
  const double x = jacobi_sn_cn_dn(u, m).dn;
  const double direct = jacobi_sn_cn_dn(3 * u, m).dn;
  CHECK(std::abs(triplication(x, k).dn - direct) < 1e-12);
  CHECK(std::abs(triplication_dn_misprinted(x, k) - direct) > 1e-3);
}

TEST_CASE("triplication denominator satisfies its defining relation with the closed form") {
  // sn(3u) = sqrt(1 - X)/k * N(X)/D(X) with X = dn(u)^2.
  testing::Rng rng(33);
  for (int i = 0; i < 100; ++i) {
    const testing::Point p = testing::random_point(rng);
    const double k = std::sqrt(p.m);
    const double X = std::pow(jacobi_sn_cn_dn(p.u, p.m).dn, 2);
    const double h = std::sqrt(1 - X) / k * triplication_sn_numerator(X, k) / triplication_denominator(X, k);
    CHECK(std::abs(h - jacobi_sn_cn_dn(3 * p.u, p.m).sn) < 1e-10);
  }
}

TEST_CASE("complex continuation reduces to the real formulas on real input") {
  const std::complex<double> x(0.9, 0.0);
  const std::complex<double> k(0.6, 0.0);
  const Triple<std::complex<double>> c = triplication(x, k);
  const JacobiTriple r = triplication(0.9, 0.6);
  CHECK(std::abs(c.sn - r.sn) < 1e-14);
  CHECK(std::abs(c.cn - r.cn) < 1e-14);
  CHECK(std::abs(c.dn - r.dn) < 1e-14);
}

TEST_CASE("real-regime entry points reject x below k'") {
  const Modulus k = Modulus::from_k(0.6);
  CHECK_THROWS_AS(triplication_from_dn(0.5, k), DomainError);
  CHECK_NOTHROW(triplication_from_dn(0.8, k));
}
