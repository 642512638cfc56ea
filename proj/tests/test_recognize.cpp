#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "quintell/bigreal.hpp"
#include "quintell/errors.hpp"
#include "quintell/lattice.hpp"
#include "quintell/recognize.hpp"
#include "support.hpp"

using namespace quintell;

TEST_CASE("BigReal arithmetic agrees with binary64 where binary64 is exact enough") {
  testing::Rng rng(51);
  for (int i = 0; i < 200; ++i) {
    const double a = testing::uniform(rng, 0.1, 10.0);
    const double b = testing::uniform(rng, 0.1, 10.0);
    const BigReal A(a), B(b);
    CHECK((A + B).to_double() == doctest::Approx(a + b).epsilon(1e-15));
    CHECK((A * B).to_double() == doctest::Approx(a * b).epsilon(1e-15));
    CHECK((A / B).to_double() == doctest::Approx(a / b).epsilon(1e-15));
    CHECK(sqrt(A).to_double() == doctest::Approx(std::sqrt(a)).epsilon(1e-15));
    CHECK(cbrt(A).to_double() == doctest::Approx(std::cbrt(a)).epsilon(1e-15));
  }
}

TEST_CASE("BigReal precision, parsing and rounding") {
  const BigReal third = BigReal(1, 400) / BigReal(3, 400);
  CHECK(third.precision() == 400);
  CHECK(third.to_string(40).rfind("0.333333333333333333333333333333333333333", 0) == 0);
  CHECK((BigReal(1, 64) + BigReal(1, 200)).precision() == 200);
  CHECK(BigReal::from_string("2.5", 100).round_to_integer() == 3);
  CHECK(BigReal::from_string("-2.5", 100).round_to_integer() == -3);
  CHECK(nth_root(BigReal(-27, 100), 3).to_double() == doctest::Approx(-3.0));
  CHECK_THROWS_AS(BigReal::from_string("1.2.3"), DomainError);
  const auto [mantissa, exponent] = BigReal(6, 64).mantissa_exponent();
  CHECK(BigReal::from_integer(mantissa, 64).to_double() * std::ldexp(1.0, static_cast<int>(exponent)) == 6.0);
}

TEST_CASE("LLL reduces a classic basis and preserves the lattice determinant") {
  std::vector<IntegerRow> basis = {{1, 1, 1}, {-1, 0, 2}, {3, 5, 6}};
  lll_reduce(basis);
  // The reduced basis of this lattice has squared lengths 1, 2, 5 (up to order).
  std::vector<long> norms;
  for (const IntegerRow& r : basis) norms.push_back(squared_norm(r).get_si());
  std::sort(norms.begin(), norms.end());
  CHECK(norms == std::vector<long>{1, 2, 5});
  // |det| = 3 is unchanged.
  const auto det = [](const std::vector<IntegerRow>& b) -> mpz_class {
    return b[0][0] * (b[1][1] * b[2][2] - b[1][2] * b[2][1]) - b[0][1] * (b[1][0] * b[2][2] - b[1][2] * b[2][0]) +
           b[0][2] * (b[1][0] * b[2][1] - b[1][1] * b[2][0]);
  };
  CHECK(abs(det(basis)) == 3);
  std::vector<IntegerRow> dependent = {{1, 2}, {2, 4}};
  CHECK_THROWS_AS(lll_reduce(dependent), DomainError);
}

TEST_CASE("recognize recovers simple algebraic numbers") {
  const long bits = 256;
  const auto found = [&](const BigReal& a) {
    const auto c = recognize(a, 8);
    return c ? c->to_string() : std::string("none");
  };
  CHECK(found(sqrt(BigReal(2, bits))) == "Y^2 - 2");
  CHECK(found((BigReal(1, bits) + sqrt(BigReal(5, bits))) / BigReal(2, bits)) == "Y^2 - Y - 1");
  CHECK(found(BigReal(3, bits) / BigReal(7, bits)) == "7*Y - 3");
  CHECK(found(cbrt(BigReal(2, bits)) + BigReal(1, bits)) == "Y^3 - 3*Y^2 + 3*Y - 3");
  CHECK(found(BigReal::pi(bits)) == "none");
  CHECK(found(exp(BigReal(1, bits))) == "none");
}

TEST_CASE("random quadratic and cubic round trip") {
  testing::Rng rng(52);
  int cases = 0;
  while (cases < 50) {
    const int degree = 2 + cases % 2;
    std::vector<long> c(static_cast<std::size_t>(degree + 1));
    for (long& v : c) v = testing::uniform_int(rng, -30, 30);
    if (c.back() == 0 || testing::has_rational_root(c)) continue;
    c = testing::primitive(c);
    const auto root = testing::real_root(c, 256);
    if (!root) continue;
    ++cases;
    const auto found = recognize(*root, 8);
    REQUIRE(found);
    REQUIRE(found->degree == degree);
    for (int i = 0; i <= degree; ++i) CHECK(found->coefficients[static_cast<std::size_t>(i)] == c[i]);
    CHECK(verify_candidate(*found, *root).to_double() < std::ldexp(1.0, -128));
  }
}

TEST_CASE("too little precision finds nothing rather than a spurious relation") {
  // A degree-6 number with large coefficients cannot be certified at 64 bits.
  const std::vector<long> c = {-1013, 7, 0, 311, -5, 0, 977};
  const auto root = testing::real_root(c, 64);
  REQUIRE(root);
  CHECK_FALSE(recognize(*root, 6).has_value());
  const auto wide = testing::real_root(c, 512);
  const auto found = recognize(*wide, 6);
  REQUIRE(found);
  CHECK(found->degree == 6);
}

TEST_CASE("explicit height bound is honoured") {
  const BigReal alpha = sqrt(BigReal(1000003, 256));
  const auto within = recognize(alpha, 4, mpz_class(1000003));
  REQUIRE(within);
  CHECK(within->to_string() == "Y^2 - 1000003");
  CHECK_FALSE(recognize(alpha, 4, mpz_class(1000002)).has_value());
}

TEST_CASE("candidate normalisation, symmetry and precision from decimals") {
  const BigReal a(0.5, 128);
  const AlgebraicCandidate c = make_candidate({mpz_class(2), mpz_class(-4), mpz_class(0)}, a);
  CHECK(c.degree == 1);
  CHECK(c.to_string() == "2*Y - 1");
  CHECK(make_candidate({1, 0, 1}, a).palindromic());
  CHECK_FALSE(make_candidate({1, 2, 3}, a).palindromic());
  // Y^2 + 2Y - 1 under Y = iW: -W^2 + 2iW - 1, symmetric.
  CHECK(make_candidate({-1, 2, 1}, a).palindromic_in_iy());
  CHECK(precision_for_decimal("0.5") == 53);
  CHECK(precision_for_decimal("0." + std::string(100, '1')) == 333);
}

TEST_CASE("resubstitution residuals") {
  const AlgebraicCandidate p = make_candidate({-2, 0, 1}, BigReal(1.5, 256));
  CHECK(verify_candidate(p, BigReal(1.5, 256)).to_double() == 0.25);
  CHECK(verify_candidate(p, sqrt(BigReal(2, 256))).to_double() < std::ldexp(1.0, -250));
}

TEST_CASE("doubling the precision keeps the candidate and tightens its residual") {
  testing::Rng rng(53);
  int cases = 0;
  while (cases < 10) {
    std::vector<long> c(4);
    for (long& v : c) v = testing::uniform_int(rng, -50, 50);
    if (c.back() == 0 || testing::has_rational_root(c)) continue;
    const auto low = testing::real_root(c, 256);
    const auto high = testing::real_root(c, 512);
    if (!low || !high) continue;
    ++cases;
    const auto a = recognize(*low, 6);
    const auto b = recognize(*high, 6);
    REQUIRE(a);
    REQUIRE(b);
    CHECK(a->coefficients == b->coefficients);
    CHECK(b->eval_residual <= a->eval_residual);
  }
}

TEST_CASE("pi has no relation of degree <= 4 and height <= 10^6") {
  for (long bits : {128L, 256L, 512L}) CHECK_FALSE(recognize(BigReal::pi(bits), 4, mpz_class(1000000)).has_value());
}

TEST_CASE("k_(5/3) from its nested radical satisfies an octic") {
  // Computed from (1/4) sqrt(8 - sqrt((3/2)(27 - 7 sqrt 5))) at 256 bits.
  const long bits = 256;
  const BigReal five(5, bits);
  const BigReal inner = BigReal(27, bits) - BigReal(7, bits) * sqrt(five);
  const BigReal k = sqrt(BigReal(8, bits) - sqrt(BigReal(3, bits) / BigReal(2, bits) * inner)) / BigReal(4, bits);
  const auto found = recognize(k, 8);
  REQUIRE(found);
  CHECK(found->degree == 8);
  CHECK(verify_candidate(*found, k).to_double() < std::ldexp(1.0, -128));
}
