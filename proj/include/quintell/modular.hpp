#pragma once

// Singular moduli: the k in (0, 1) with K(1 - k^2) / K(k^2) = sqrt(r) for a
// positive rational r.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "quintell/bigreal.hpp"
#include "quintell/elliptic.hpp"
#include "quintell/recognize.hpp"

namespace quintell {

/// Positive rational p/q in lowest terms.
struct Rational {
  std::int64_t num = 1;
  std::int64_t den = 1;

  /// "p/q" or an integer; throws DomainError on malformed input or r <= 0.
  static Rational parse(std::string_view text);
  static Rational make(std::int64_t num, std::int64_t den);

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  Rational reciprocal() const { return make(den, num); }
  std::string to_string() const;

  friend bool operator==(const Rational&, const Rational&) = default;
};

struct SingularModulus {
  Rational r;
  double k;
  double m;
  double kprime;
  /// exp(-pi sqrt(r)).
  double q;
  /// |K(1 - m)/K(m) - sqrt(r)|.
  double defining_residual;

  Modulus modulus() const { return Modulus::from_parameter(m); }
};

/// K(1 - m) / K(m), strictly decreasing in m.
double period_ratio(double m);

/// Bisection on m over (1e-16, 1 - 1e-16).  The bracket is halved until its
/// width drops below 1e-15 relative to the upper end (or the midpoint
/// coincides with an endpoint); more than 200 halvings raise ConvergenceError.
SingularModulus singular_modulus(const Rational& r);

/// k_r at `bits` of precision from k = theta2(q)^2 / theta3(q)^2 with
/// q = exp(-pi sqrt(r)); for r < 1 the complementary form
/// theta4(q')^2 / theta3(q')^2 with q' = exp(-pi / sqrt(r)) is used.
BigReal singular_modulus_extended(const Rational& r, long bits = BigReal::kDefaultPrecision);

struct AlgebraicNote {
  std::optional<AlgebraicCandidate> candidate;
  /// Precision at which the candidate was accepted (or the last one tried).
  long bits;
};

/// Integer-relation search for a polynomial satisfied by k_r.  Starts at
/// `bits` and doubles the precision up to `max_bits` while nothing is found;
/// the height bound is the per-degree default of recognize.  An empty
/// candidate means "not found within bounds".
AlgebraicNote modulus_is_algebraic_note(const Rational& r, long bits = BigReal::kDefaultPrecision,
                                        int max_degree = 8, long max_bits = 1024);

}  // namespace quintell
