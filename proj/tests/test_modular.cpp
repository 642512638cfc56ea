#include <cmath>

#include "doctest.h"
#include "quintell/errors.hpp"
#include "quintell/modular.hpp"

using namespace quintell;
using doctest::Approx;

TEST_CASE("rational parsing") {
  CHECK(Rational::parse("34/3") == Rational::make(34, 3));
  CHECK(Rational::parse("6/4") == Rational::make(3, 2));
  CHECK(Rational::parse("7").to_string() == "7");
  CHECK(Rational::make(4, 6).to_string() == "2/3");
  CHECK_THROWS_AS(Rational::parse("0"), DomainError);
  CHECK_THROWS_AS(Rational::parse("-1/3"), DomainError);
  CHECK_THROWS_AS(Rational::parse("1/0"), DomainError);
  CHECK_THROWS_AS(Rational::parse("abc"), DomainError);
  CHECK_THROWS_AS(Rational::parse("1.5"), DomainError);
}

TEST_CASE("classical singular moduli in closed form") {
  CHECK(singular_modulus(Rational::make(1, 1)).k == Approx(std::sqrt(0.5)).epsilon(1e-14));
  CHECK(singular_modulus(Rational::make(2, 1)).k == Approx(std::sqrt(2.0) - 1).epsilon(1e-13));
  CHECK(singular_modulus(Rational::make(3, 1)).k == Approx((std::sqrt(6.0) - std::sqrt(2.0)) / 4).epsilon(1e-13));
  CHECK(singular_modulus(Rational::make(4, 1)).k == Approx(3 - 2 * std::sqrt(2.0)).epsilon(1e-13));
}

TEST_CASE("k_r decreases in r and k_(1/r) is the complementary modulus of k_r") {
  double previous = 1.0;
  for (int i = 1; i <= 40; ++i) {
    const Rational r = Rational::make(i, 4);
    const SingularModulus sm = singular_modulus(r);
    CHECK(sm.k < previous);
    previous = sm.k;
    CHECK(sm.defining_residual < 1e-12);
    CHECK(singular_modulus(r.reciprocal()).k == Approx(sm.kprime).epsilon(1e-12));
    CHECK(sm.q == Approx(std::exp(-M_PI * std::sqrt(r.value()))).epsilon(1e-14));
  }
}

TEST_CASE("period ratio is strictly decreasing") {
  double previous = INFINITY;
  for (int i = 1; i < 100; ++i) {
    const double v = period_ratio(i / 100.0);
    CHECK(v < previous);
    previous = v;
  }
  CHECK(period_ratio(0.5) == Approx(1.0).epsilon(1e-15));
}

TEST_CASE("extended precision agrees with binary64 and with itself at higher precision") {
  for (const char* text : {"1/3", "1", "5/3", "34/3", "49/3"}) {
    const Rational r = Rational::parse(text);
    const BigReal k256 = singular_modulus_extended(r, 256);
    const BigReal k512 = singular_modulus_extended(r, 512);
    CAPTURE(text);
    CHECK(std::abs(k256.to_double() - singular_modulus(r).k) < 1e-14);
    CHECK(abs(k256 - k512).to_double() < std::ldexp(1.0, -240));
  }
  const BigReal two(2, 300);
  const BigReal exact = sqrt(two) - BigReal(1, 300);
  CHECK(abs(singular_modulus_extended(Rational::make(2, 1), 300) - exact).to_double() < std::ldexp(1.0, -280));
}

TEST_CASE("algebraic notes for small r") {
  const AlgebraicNote one = modulus_is_algebraic_note(Rational::make(1, 1));
  REQUIRE(one.candidate);
  CHECK(one.candidate->to_string() == "2*Y^2 - 1");
  const AlgebraicNote two = modulus_is_algebraic_note(Rational::make(2, 1));
  REQUIRE(two.candidate);
  CHECK(two.candidate->to_string() == "Y^2 + 2*Y - 1");
}

TEST_CASE("k_(34/3) needs escalation to 512 bits and is symmetric under Y = iW") {
  const AlgebraicNote note = modulus_is_algebraic_note(Rational::make(34, 3));
  REQUIRE(note.candidate);
  CHECK(note.bits == 512);
  CHECK(note.candidate->degree == 8);
  CHECK(note.candidate->palindromic_in_iy());
  CHECK(note.candidate->height.get_str() == "192236826");
}
