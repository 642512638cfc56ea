#pragma once

// Helpers shared by the test binaries: fixed-seed sampling and
// extended-precision roots of small integer polynomials.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "quintell/bigreal.hpp"
#include "quintell/elliptic.hpp"

namespace quintell::testing {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

inline long uniform_int(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

struct Point {
  double u;
  double m;
};

// Real-regime sample: m in (0.02, 0.98), u in (0.01 K, 0.99 K).
inline Point random_point(Rng& rng) {
  const double m = uniform(rng, 0.02, 0.98);
  return {uniform(rng, 0.01, 0.99) * complete_K(m), m};
}

// Horner evaluation, coefficients constant term first.
template <typename T>
T horner(const std::vector<long>& c, const T& x, long bits) {
  T acc = T(c.back(), bits);
  for (std::size_t i = c.size() - 1; i-- > 0;) acc = acc * x + T(c[i], bits);
  return acc;
}

inline double horner(const std::vector<long>& c, double x) {
  double acc = static_cast<double>(c.back());
  for (std::size_t i = c.size() - 1; i-- > 0;) acc = acc * x + static_cast<double>(c[i]);
  return acc;
}

// A real root of the integer polynomial c, located by bisection in binary64
// and refined by Newton steps in BigReal.  Empty when c has no sign change
// on the scanned interval.
inline std::optional<BigReal> real_root(const std::vector<long>& c, long bits) {
  const double bound = 1.0 + static_cast<double>(std::abs(*std::max_element(
                                  c.begin(), c.end(), [](long a, long b) { return std::abs(a) < std::abs(b); }))) /
                                  static_cast<double>(std::abs(c.back()));
  const int steps = 4000;
  for (int i = 0; i < steps; ++i) {
    double lo = -bound + 2.0 * bound * i / steps;
    double hi = -bound + 2.0 * bound * (i + 1) / steps;
    double flo = horner(c, lo);
    if (flo == 0.0) return BigReal(lo, bits);
    if (flo * horner(c, hi) > 0.0) continue;
    for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(lo)); ++it) {
      const double mid = 0.5 * (lo + hi);
      const double fm = horner(c, mid);
      if ((fm < 0.0) == (flo < 0.0)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
    }
    std::vector<long> dc;
    for (std::size_t j = 1; j < c.size(); ++j) dc.push_back(c[j] * static_cast<long>(j));
    BigReal x(0.5 * (lo + hi), bits);
    for (int it = 0; it < 12; ++it) x = x - horner<BigReal>(c, x, bits) / horner<BigReal>(dc, x, bits);
    return x;
  }
  return std::nullopt;
}

// True when the integer polynomial has a rational root p/q (rational root
// test); used to keep sampled quadratics and cubics irreducible over Q.
inline bool has_rational_root(const std::vector<long>& c) {
  const auto divisors = [](long n) {
    std::vector<long> out;
    n = std::abs(n);
    for (long d = 1; d <= n; ++d) {
      if (n % d == 0) out.push_back(d);
    }
    return out;
  };
  if (c.front() == 0) return true;
  for (long p : divisors(c.front())) {
    for (long q : divisors(c.back())) {
      for (long s : {1L, -1L}) {
        mpq_class r(s * p, q);
        r.canonicalize();
        mpq_class acc = c.back();
        for (std::size_t i = c.size() - 1; i-- > 0;) acc = acc * r + c[i];
        if (acc == 0) return true;
      }
    }
  }
  return false;
}

// Divides out the content and makes the leading coefficient positive.
inline std::vector<long> primitive(std::vector<long> c) {
  long g = 0;
  for (long v : c) g = std::gcd(g, v);
  if (g == 0) return c;
  if (c.back() < 0) g = -g;
  for (long& v : c) v /= g;
  return c;
}

}  // namespace quintell::testing
