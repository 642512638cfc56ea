#pragma once

// Extended-precision reals for the integer-relation search.  A thin value
// type over an MPFR float: results of binary operations carry the larger
// of the two operand precisions and are correctly rounded (round to nearest).

#include <gmpxx.h>
#include <mpfr.h>

#include <compare>
#include <string>
#include <string_view>

namespace quintell {

class BigReal {
 public:
  static constexpr long kDefaultPrecision = 256;

  /// Zero at the given precision (bits).
  explicit BigReal(long precision_bits = kDefaultPrecision);
  BigReal(double value, long precision_bits = kDefaultPrecision);
  BigReal(long value, long precision_bits);
  BigReal(int value, long precision_bits = kDefaultPrecision)
      : BigReal(static_cast<long>(value), precision_bits) {}

  static BigReal from_string(std::string_view decimal, long precision_bits = kDefaultPrecision);
  static BigReal from_integer(const mpz_class& value, long precision_bits = kDefaultPrecision);
  static BigReal pi(long precision_bits = kDefaultPrecision);

  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;
  ~BigReal();

  long precision() const { return static_cast<long>(mpfr_get_prec(value_)); }
  /// Copy rounded to a different precision.
  BigReal with_precision(long precision_bits) const;

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Decimal rendering with `digits` significant digits.
  std::string to_string(int digits = 30) const;
  int sign() const { return mpfr_sgn(value_); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  /// Binary exponent e with value = mantissa * 2^e and the mantissa an
  /// integer of exactly precision() bits (top bit set).  Zero yields 0, 0.
  std::pair<mpz_class, long> mantissa_exponent() const;
  /// Nearest integer (ties away from zero).
  mpz_class round_to_integer() const;

  BigReal& operator+=(const BigReal& rhs);
  BigReal& operator-=(const BigReal& rhs);
  BigReal& operator*=(const BigReal& rhs);
  BigReal& operator/=(const BigReal& rhs);

  friend BigReal operator+(BigReal lhs, const BigReal& rhs) { return lhs += rhs; }
  friend BigReal operator-(BigReal lhs, const BigReal& rhs) { return lhs -= rhs; }
  friend BigReal operator*(BigReal lhs, const BigReal& rhs) { return lhs *= rhs; }
  friend BigReal operator/(BigReal lhs, const BigReal& rhs) { return lhs /= rhs; }
  BigReal operator-() const;

  friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend std::partial_ordering operator<=>(const BigReal& a, const BigReal& b);

  friend BigReal sqrt(const BigReal& x);
  friend BigReal cbrt(const BigReal& x);
  /// Real n-th root; negative arguments are allowed for odd n.
  friend BigReal nth_root(const BigReal& x, unsigned long n);
  friend BigReal pow(const BigReal& x, long n);
  friend BigReal abs(const BigReal& x);
  friend BigReal exp(const BigReal& x);
  friend BigReal log2(const BigReal& x);
  /// x * 2^e.
  friend BigReal ldexp(const BigReal& x, long e);

  mpfr_srcptr raw() const { return value_; }

 private:
  struct Uninitialized {};
  explicit BigReal(Uninitialized) {}

  mpfr_t value_;
};

}  // namespace quintell
