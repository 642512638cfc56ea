#include "quintell/modular.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <numeric>

#include "quintell/errors.hpp"

namespace quintell {

namespace {

std::int64_t parse_integer(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || text.empty()) {
    throw DomainError("malformed rational '" + std::string(whole) + "': expected p/q or an integer");
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Sums of the theta series at nome q with terms down to 2^-(bits).
struct ThetaValues {
  BigReal theta2;
  BigReal theta3;
  BigReal theta4;
};

ThetaValues theta_constants(const BigReal& log_q, long bits) {
  const long prec = log_q.precision();
  const BigReal eps = ldexp(BigReal(1, prec), -bits);
  BigReal sum2(1, prec);  // sum over n >= 0 of q^(n(n+1))
  BigReal sum3(0, prec);  // sum over n >= 1 of q^(n^2)
  BigReal sum4(0, prec);  // sum over n >= 1 of (-1)^n q^(n^2)
  for (long n = 1; n < 100000; ++n) {
    const BigReal square = exp(log_q * BigReal(n * n, prec));
    const BigReal oblong = exp(log_q * BigReal(n * (n + 1), prec));
    sum3 += square;
    sum4 += (n % 2 == 0) ? square : -square;
    sum2 += oblong;
    if (square < eps) break;
  }
  const BigReal quarter = exp(log_q / BigReal(4, prec));
  const BigReal one(1, prec);
  const BigReal two(2, prec);
  return {two * quarter * sum2, one + two * sum3, one + two * sum4};
}

}  // namespace

Rational Rational::make(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num <= 0) throw DomainError("rational r must be positive, got " + std::to_string(num) + "/" + std::to_string(den));
  const std::int64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

Rational Rational::parse(std::string_view text) {
  const std::string_view s = trim(text);
  const std::size_t slash = s.find('/');
  if (slash == std::string_view::npos) return make(parse_integer(s, text), 1);
  return make(parse_integer(trim(s.substr(0, slash)), text), parse_integer(trim(s.substr(slash + 1)), text));
}

std::string Rational::to_string() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

double period_ratio(double m) { return complete_K(1.0 - m) / complete_K(m); }

SingularModulus singular_modulus(const Rational& r) {
  constexpr double eps = 1e-16;
  const double target = std::sqrt(r.value());
  double lo = eps;
  double hi = 1.0 - eps;
  const auto f = [target](double m) { return period_ratio(m) - target; };
  if (f(lo) < 0.0 || f(hi) > 0.0) {
    throw DomainError("singular_modulus: sqrt(r) outside the range of K(1-m)/K(m) on (1e-16, 1-1e-16) for r = " +
                      r.to_string());
  }
  int iterations = 0;
  while (true) {
    const double mid = 0.5 * (lo + hi);
    if (hi - lo < 1e-15 * hi || mid == lo || mid == hi) break;
    if (++iterations > 200) throw ConvergenceError("singular_modulus: bisection exceeded 200 halvings");
    (f(mid) > 0.0 ? lo : hi) = mid;
  }
  const double m = 0.5 * (lo + hi);
  SingularModulus out{r, std::sqrt(m), m, std::sqrt(1.0 - m), std::exp(-std::numbers::pi * target),
                      std::abs(f(m))};
  return out;
}

BigReal singular_modulus_extended(const Rational& r, long bits) {
  const long guard = 32;
  const long prec = bits + guard;
  const BigReal num = BigReal::from_integer(mpz_class(static_cast<long>(r.num)), prec);
  const BigReal den = BigReal::from_integer(mpz_class(static_cast<long>(r.den)), prec);
  const BigReal pi = BigReal::pi(prec);
  BigReal k(prec);
  if (r.num >= r.den) {
    const ThetaValues t = theta_constants(-(pi * sqrt(num / den)), prec);
    const BigReal ratio = t.theta2 / t.theta3;
    k = ratio * ratio;
  } else {
    const ThetaValues t = theta_constants(-(pi * sqrt(den / num)), prec);
    const BigReal ratio = t.theta4 / t.theta3;
    k = ratio * ratio;
  }
  return k.with_precision(bits);
}

AlgebraicNote modulus_is_algebraic_note(const Rational& r, long bits, int max_degree, long max_bits) {
  AlgebraicNote note{std::nullopt, bits};
  for (long b = bits; b <= max_bits; b *= 2) {
    note.bits = b;
    note.candidate = recognize(singular_modulus_extended(r, b), max_degree);
    if (note.candidate) break;
  }
  return note;
}

}  // namespace quintell
