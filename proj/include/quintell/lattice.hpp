#pragma once

// Exact integral LLL reduction (delta = 3/4) on integer row bases.

#include <gmpxx.h>

#include <vector>

namespace quintell {

using IntegerRow = std::vector<mpz_class>;

/// Reduces the rows of `basis` in place.  Rows must be linearly independent
/// and of equal length; throws DomainError otherwise.  Arithmetic is exact
/// (Gram determinants and scaled Gram-Schmidt coefficients are integers),
/// so the result is deterministic.
void lll_reduce(std::vector<IntegerRow>& basis);

/// Squared Euclidean length.
mpz_class squared_norm(const IntegerRow& row);

}  // namespace quintell
