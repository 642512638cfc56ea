#pragma once

// Minimal-polynomial recognition by integer relations: LLL on the lattice
// spanned by e_i (+) round(2^P alpha^i), i = 0..d, where P is the precision
// of alpha in bits.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "quintell/bigreal.hpp"

namespace quintell {

struct AlgebraicCandidate {
  int degree = 0;
  /// Constant term first; gcd 1 and positive leading coefficient.
  std::vector<mpz_class> coefficients;
  /// |p(alpha)| at the working precision.
  BigReal eval_residual;
  /// Largest coefficient magnitude.
  mpz_class height;

  bool palindromic() const;
  /// True when the substitution Y = iW turns the polynomial into one whose
  /// Gaussian-integer coefficients read the same in both directions, up to sign.
  bool palindromic_in_iy() const;
  /// "2*Y^2 - 1" style rendering, highest power first.
  std::string to_string() const;
};

/// Largest height accepted when no explicit bound is given: 2^floor(2P / (3(d+1))).
/// Spurious relations at precision P and degree d have height near
/// 2^(P/(d+1)), so this keeps a margin of 2^(P/(3(d+1))) below them.
mpz_class default_height_bound(long precision_bits, int degree);

/// Tries d = 1..max_degree and returns the first relation with
/// |p(alpha)| < 2^(-P/2) and height <= max_height (the per-degree default
/// when absent).  max_degree must lie in [1, 16].
std::optional<AlgebraicCandidate> recognize(const BigReal& alpha, int max_degree,
                                            const std::optional<mpz_class>& max_height = std::nullopt);

/// |p(alpha)| by Horner at alpha's precision.
BigReal verify_candidate(const AlgebraicCandidate& p, const BigReal& alpha);

/// Candidate record for a known coefficient list (normalized: gcd 1,
/// positive leading coefficient, trailing zero high coefficients dropped).
AlgebraicCandidate make_candidate(std::vector<mpz_class> coefficients, const BigReal& alpha);

/// Bits carried by a decimal literal: ceil(significant digits * log2(10)),
/// at least 53.
long precision_for_decimal(const std::string& literal);

}  // namespace quintell
