#include "quintell/recognize.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>
#include <utility>

#include "quintell/errors.hpp"
#include "quintell/lattice.hpp"

namespace quintell {

bool AlgebraicCandidate::palindromic() const {
  const std::size_t n = coefficients.size();
  for (std::size_t i = 0; i < n / 2; ++i) {
    if (coefficients[i] != coefficients[n - 1 - i]) return false;
  }
  return n > 1;
}

bool AlgebraicCandidate::palindromic_in_iy() const {
  const std::size_t n = coefficients.size();
  if (n < 2) return false;
  // c_j i^j as (real, imaginary), with i^j cycling through 1, i, -1, -i.
  const auto rotated = [this](std::size_t j) -> std::pair<mpz_class, mpz_class> {
    const mpz_class& c = coefficients[j];
    switch (j % 4) {
      case 0: return {c, 0};
      case 1: return {0, c};
      case 2: return {-c, 0};
      default: return {0, -c};
    }
  };
  for (const int sign : {1, -1}) {
    bool match = true;
    for (std::size_t j = 0; j < n && match; ++j) {
      const auto [ar, ai] = rotated(j);
      const auto [br, bi] = rotated(n - 1 - j);
      match = ar == sign * br && ai == sign * bi;
    }
    if (match) return true;
  }
  return false;
}

std::string AlgebraicCandidate::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (int i = degree; i >= 0; --i) {
    const mpz_class& c = coefficients[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const mpz_class mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1 && i > 0;
    if (!unit) out << mag.get_str();
    if (i > 0) {
      if (!unit) out << "*";
      out << "Y";
      if (i > 1) out << "^" << i;
    }
  }
  if (first) out << "0";
  return out.str();
}

mpz_class default_height_bound(long precision_bits, int degree) {
  mpz_class bound = 1;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(),
               static_cast<mp_bitcnt_t>(2L * precision_bits / (3L * (degree + 1))));
  return bound;
}

BigReal verify_candidate(const AlgebraicCandidate& p, const BigReal& alpha) {
  const long prec = alpha.precision();
  BigReal acc(prec);
  for (std::size_t i = p.coefficients.size(); i-- > 0;) {
    acc = acc * alpha + BigReal::from_integer(p.coefficients[i], prec);
  }
  return abs(acc);
}

AlgebraicCandidate make_candidate(std::vector<mpz_class> coefficients, const BigReal& alpha) {
  while (coefficients.size() > 1 && coefficients.back() == 0) coefficients.pop_back();
  mpz_class g = 0;
  for (const mpz_class& c : coefficients) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g == 0) throw DomainError("make_candidate: zero polynomial");
  if (coefficients.back() < 0) g = -g;
  mpz_class height = 0;
  for (mpz_class& c : coefficients) {
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    height = std::max(height, mpz_class(abs(c)));
  }
  AlgebraicCandidate out;
  out.degree = static_cast<int>(coefficients.size()) - 1;
  out.coefficients = std::move(coefficients);
  out.height = height;
  out.eval_residual = verify_candidate(out, alpha);
  return out;
}

std::optional<AlgebraicCandidate> recognize(const BigReal& alpha, int max_degree,
                                            const std::optional<mpz_class>& max_height) {
  if (max_degree < 1 || max_degree > 16) throw DomainError("recognize: max_degree must lie in [1, 16]");
  if (!alpha.is_finite()) throw DomainError("recognize: alpha must be finite");
  const long prec = alpha.precision();
  const BigReal accept = ldexp(BigReal(1, prec), -prec / 2);

  for (int d = 1; d <= max_degree; ++d) {
    const std::size_t n = static_cast<std::size_t>(d) + 1;
    std::vector<IntegerRow> basis(n, IntegerRow(n + 1, mpz_class(0)));
    BigReal power(1, prec);
    for (std::size_t i = 0; i < n; ++i) {
      basis[i][i] = 1;
      basis[i][n] = ldexp(power, prec).round_to_integer();
      power = power * alpha;
    }
    lll_reduce(basis);

    const mpz_class bound = max_height ? *max_height : default_height_bound(prec, d);
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return squared_norm(basis[a]) < squared_norm(basis[b]);
    });
    for (std::size_t idx : order) {
      std::vector<mpz_class> coeffs(basis[idx].begin(), basis[idx].begin() + static_cast<long>(n));
      if (std::all_of(coeffs.begin(), coeffs.end(), [](const mpz_class& c) { return c == 0; })) continue;
      AlgebraicCandidate candidate = make_candidate(std::move(coeffs), alpha);
      if (candidate.degree < 1) continue;
      if (candidate.height <= bound && candidate.eval_residual < accept) return candidate;
    }
  }
  return std::nullopt;
}

long precision_for_decimal(const std::string& literal) {
  std::size_t digits = 0;
  bool leading = true;
  for (char ch : literal) {
    if (ch == 'e' || ch == 'E') break;
    if (!std::isdigit(static_cast<unsigned char>(ch))) continue;
    if (leading && ch == '0') continue;
    leading = false;
    ++digits;
  }
  const long bits = static_cast<long>(std::ceil(static_cast<double>(digits) * std::log2(10.0)));
  return std::max(53L, bits);
}

}  // namespace quintell
