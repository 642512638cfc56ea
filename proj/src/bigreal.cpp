#include "quintell/bigreal.hpp"

#include <algorithm>
#include <memory>
#include <vector>

#include "quintell/errors.hpp"

namespace quintell {

namespace {

mpfr_prec_t wider(const BigReal& a, const BigReal& b) {
  return static_cast<mpfr_prec_t>(std::max(a.precision(), b.precision()));
}

void require_precision(long bits) {
  if (bits < MPFR_PREC_MIN || bits > (1L << 24)) {
    throw DomainError("BigReal: precision out of range: " + std::to_string(bits));
  }
}

}  // namespace

BigReal::BigReal(long precision_bits) {
  require_precision(precision_bits);
  mpfr_init2(value_, precision_bits);
  mpfr_set_zero(value_, 1);
}

BigReal::BigReal(double value, long precision_bits) {
  require_precision(precision_bits);
  mpfr_init2(value_, precision_bits);
  mpfr_set_d(value_, value, MPFR_RNDN);
}

BigReal::BigReal(long value, long precision_bits) {
  require_precision(precision_bits);
  mpfr_init2(value_, precision_bits);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

BigReal BigReal::from_string(std::string_view decimal, long precision_bits) {
  BigReal out(precision_bits);
  const std::string text(decimal);
  if (mpfr_set_str(out.value_, text.c_str(), 10, MPFR_RNDN) != 0) {
    throw DomainError("BigReal: not a decimal number: '" + text + "'");
  }
  return out;
}

BigReal BigReal::from_integer(const mpz_class& value, long precision_bits) {
  BigReal out(precision_bits);
  mpfr_set_z(out.value_, value.get_mpz_t(), MPFR_RNDN);
  return out;
}

BigReal BigReal::pi(long precision_bits) {
  BigReal out(precision_bits);
  mpfr_const_pi(out.value_, MPFR_RNDN);
  return out;
}

BigReal::BigReal(const BigReal& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept {
  // The moved-from object keeps a valid zero of the same precision.
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set_zero(value_, 1);
  mpfr_swap(value_, other.value_);
}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

BigReal::~BigReal() { mpfr_clear(value_); }

BigReal BigReal::with_precision(long precision_bits) const {
  BigReal out(precision_bits);
  mpfr_set(out.value_, value_, MPFR_RNDN);
  return out;
}

std::string BigReal::to_string(int digits) const {
  if (!is_finite()) return mpfr_nan_p(value_) ? "nan" : (sign() < 0 ? "-inf" : "inf");
  const int size = mpfr_snprintf(nullptr, 0, "%.*Rg", digits, value_);
  std::vector<char> buffer(static_cast<std::size_t>(size) + 1);
  mpfr_snprintf(buffer.data(), buffer.size(), "%.*Rg", digits, value_);
  return std::string(buffer.data());
}

std::pair<mpz_class, long> BigReal::mantissa_exponent() const {
  if (is_zero()) return {mpz_class(0), 0};
  mpz_class mantissa;
  const mpfr_exp_t e = mpfr_get_z_2exp(mantissa.get_mpz_t(), value_);
  return {mantissa, static_cast<long>(e)};
}

mpz_class BigReal::round_to_integer() const {
  BigReal rounded(precision());
  mpfr_round(rounded.value_, value_);
  mpz_class out;
  mpfr_get_z(out.get_mpz_t(), rounded.value_, MPFR_RNDN);
  return out;
}

#define QUINTELL_BIGREAL_COMPOUND(op, fn)                          \
  BigReal& BigReal::operator op(const BigReal& rhs) {              \
    const mpfr_prec_t prec = wider(*this, rhs);                    \
    if (prec != mpfr_get_prec(value_)) mpfr_prec_round(value_, prec, MPFR_RNDN); \
    fn(value_, value_, rhs.value_, MPFR_RNDN);                     \
    return *this;                                                  \
  }

QUINTELL_BIGREAL_COMPOUND(+=, mpfr_add)
QUINTELL_BIGREAL_COMPOUND(-=, mpfr_sub)
QUINTELL_BIGREAL_COMPOUND(*=, mpfr_mul)
QUINTELL_BIGREAL_COMPOUND(/=, mpfr_div)

#undef QUINTELL_BIGREAL_COMPOUND

BigReal BigReal::operator-() const {
  BigReal out(*this);
  mpfr_neg(out.value_, out.value_, MPFR_RNDN);
  return out;
}

std::partial_ordering operator<=>(const BigReal& a, const BigReal& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

BigReal sqrt(const BigReal& x) {
  BigReal out(x.precision());
  mpfr_sqrt(out.value_, x.value_, MPFR_RNDN);
  return out;
}

BigReal cbrt(const BigReal& x) {
  BigReal out(x.precision());
  mpfr_cbrt(out.value_, x.value_, MPFR_RNDN);
  return out;
}

BigReal nth_root(const BigReal& x, unsigned long n) {
  BigReal out(x.precision());
  mpfr_rootn_ui(out.value_, x.value_, n, MPFR_RNDN);
  return out;
}

BigReal pow(const BigReal& x, long n) {
  BigReal out(x.precision());
  mpfr_pow_si(out.value_, x.value_, n, MPFR_RNDN);
  return out;
}

BigReal abs(const BigReal& x) {
  BigReal out(x.precision());
  mpfr_abs(out.value_, x.value_, MPFR_RNDN);
  return out;
}

BigReal exp(const BigReal& x) {
  BigReal out(x.precision());
  mpfr_exp(out.value_, x.value_, MPFR_RNDN);
  return out;
}

BigReal log2(const BigReal& x) {
  BigReal out(x.precision());
  mpfr_log2(out.value_, x.value_, MPFR_RNDN);
  return out;
}

BigReal ldexp(const BigReal& x, long e) {
  BigReal out(x.precision());
  mpfr_mul_2si(out.value_, x.value_, e, MPFR_RNDN);
  return out;
}

}  // namespace quintell
