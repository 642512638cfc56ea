#include "quintell/elliptic.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <string>

#include "quintell/errors.hpp"

namespace quintell {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kSeriesCap = 400;
constexpr double kSeriesTermBound = 1e-17;

void require_parameter(double m, const char* where) {
  if (!(m >= 0.0 && m < 1.0)) {
    throw DomainError(std::string(where) + ": parameter m must lie in [0, 1), got " +
                      std::to_string(m));
  }
}

void require_series_parameter(double m, const char* where) {
  if (!(m >= 1e-6 && m <= 1.0 - 1e-6)) {
    throw DomainError(std::string(where) + ": series oracle needs m in [1e-6, 1-1e-6]");
  }
}

// Carlson's symmetric integral R_F(x, y, z) by duplication, finished with the
// fifth-order Taylor polynomial in the elementary symmetric functions.
double carlson_rf(double x, double y, double z) {
  static const double tolerance =
      std::pow(3.0 * std::numeric_limits<double>::epsilon() * 0.01, 1.0 / 8.0);
  const double x0 = x;
  const double y0 = y;
  const double a0 = (x + y + z) / 3.0;
  double an = a0;
  double q = std::max({std::abs(a0 - x), std::abs(a0 - y), std::abs(a0 - z)}) / tolerance;
  double scale = 1.0;
  while (q >= scale * std::abs(an)) {
    const double sx = std::sqrt(x);
    const double sy = std::sqrt(y);
    const double sz = std::sqrt(z);
    const double lambda = sx * sy + sy * sz + sz * sx;
    an = (an + lambda) / 4.0;
    x = (x + lambda) / 4.0;
    y = (y + lambda) / 4.0;
    z = (z + lambda) / 4.0;
    scale *= 4.0;
  }
  const double dx = (a0 - x0) / (scale * an);
  const double dy = (a0 - y0) / (scale * an);
  const double dz = -(dx + dy);
  const double e2 = dx * dy - dz * dz;
  const double e3 = dx * dy * dz;
  return (e3 * (6930.0 * e3 + e2 * (15015.0 * e2 - 16380.0) + 17160.0) +
          e2 * ((10010.0 - 5775.0 * e2) * e2 - 24024.0) + 240240.0) /
         (240240.0 * std::sqrt(an));
}

// sn, cn, dn for 0 <= u <= K(m), 0 < m < 1.
JacobiTriple landen_first_quarter(double u, double m) {
  constexpr int kMaxLevels = 32;
  std::array<double, kMaxLevels + 1> a{};
  std::array<double, kMaxLevels + 1> c{};
  a[0] = 1.0;
  c[0] = std::sqrt(m);
  double b = std::sqrt(1.0 - m);
  int levels = 0;
  while (c[levels] / a[levels] >= 1e-15) {
    if (levels == kMaxLevels) {
      throw ConvergenceError("jacobi_sn_cn_dn: Landen descent did not terminate");
    }
    a[levels + 1] = 0.5 * (a[levels] + b);
    c[levels + 1] = c[levels] * c[levels] / (4.0 * a[levels + 1]);
    b = std::sqrt(a[levels] * b);
    ++levels;
  }
  double phi = std::ldexp(a[levels] * u, levels);
  for (int i = levels; i > 0; --i) {
    phi = 0.5 * (phi + std::asin(c[i] / a[i] * std::sin(phi)));
  }
  const double sn = std::sin(phi);
  const double cn = std::cos(phi);
  // dn^2 = k'^2 + m cn^2 keeps full accuracy near u = K where the
  // cos(phi0)/cos(phi1 - phi0) form degenerates to 0/0.
  const double dn = std::sqrt((1.0 - m) + m * cn * cn);
  return {sn, cn, dn};
}

struct NomeFrame {
  double K;
  double q;
  double z;
};

NomeFrame nome_frame(double u, double m) {
  const double K = complete_K(m);
  const double q = std::exp(-kPi * complete_K(1.0 - m) / K);
  return {K, q, kPi * u / (2.0 * K)};
}

enum class CosineDenominator { kStandard, kMisprinted };

double cn_series(double u, double m, CosineDenominator form) {
  const NomeFrame f = nome_frame(u, m);
  const double prefactor = 2.0 * kPi / (f.K * std::sqrt(m));
  const double root_q = std::sqrt(f.q);
  double sum = 0.0;
  double q_n = 1.0;  // q^n
  for (int n = 0; n < kSeriesCap; ++n) {
    const double shift = form == CosineDenominator::kStandard ? f.q * q_n * q_n
                                                              : q_n * q_n / f.q;
    const double coefficient = prefactor * root_q * q_n / (1.0 + shift);
    sum += coefficient * std::cos((2 * n + 1) * f.z);
    if (std::abs(coefficient) < kSeriesTermBound) return sum;
    q_n *= f.q;
  }
  throw ConvergenceError("qseries_cn: 400 terms without meeting the term bound");
}

}  // namespace

Modulus Modulus::from_k(double k) {
  if (!(k > 0.0 && k < 1.0)) {
    throw DomainError("Modulus: k must lie in (0, 1), got " + std::to_string(k));
  }
  return Modulus(k, k * k, std::sqrt((1.0 - k) * (1.0 + k)));
}

Modulus Modulus::from_parameter(double m) {
  if (!(m > 0.0 && m < 1.0)) {
    throw DomainError("Modulus: m must lie in (0, 1), got " + std::to_string(m));
  }
  return Modulus(std::sqrt(m), m, std::sqrt(1.0 - m));
}

double complete_K(double m) {
  require_parameter(m, "complete_K");
  double a = 1.0;
  double b = std::sqrt(1.0 - m);
  for (int i = 0; i < 64 && std::abs(a - b) > 1e-16 * a; ++i) {
    const double next = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = next;
  }
  return kPi / (a + b);
}

double hypergeometric_K(double m, int terms) {
  require_parameter(m, "hypergeometric_K");
  double term = 1.0;
  double sum = 1.0;
  const int cap = terms < 0 ? 100000 : terms;
  for (int n = 1; n < cap; ++n) {
    const double ratio = (2.0 * n - 1.0) / (2.0 * n);
    term *= ratio * ratio * m;
    sum += term;
    if (terms < 0 && term < 1e-18) break;
  }
  return 0.5 * kPi * sum;
}

double incomplete_F(double phi, double m) {
  require_parameter(m, "incomplete_F");
  if (!std::isfinite(phi)) throw DomainError("incomplete_F: amplitude must be finite");
  const double turns = std::nearbyint(phi / kPi);
  const double reduced = phi - turns * kPi;
  const double s = std::sin(reduced);
  const double c = std::cos(reduced);
  const double principal = s * carlson_rf(c * c, 1.0 - m * s * s, 1.0);
  return turns == 0.0 ? principal : principal + 2.0 * turns * complete_K(m);
}

JacobiTriple jacobi_sn_cn_dn(double u, double m) {
  require_parameter(m, "jacobi_sn_cn_dn");
  if (!std::isfinite(u)) throw DomainError("jacobi_sn_cn_dn: argument must be finite");
  if (m == 0.0) return {std::sin(u), std::cos(u), 1.0};

  const double K = complete_K(m);
  const double sign = u < 0.0 ? -1.0 : 1.0;
  double v = std::fmod(std::abs(u), 4.0 * K);
  bool flip_sn = false;
  bool flip_cn = false;
  if (v >= 2.0 * K) {
    v -= 2.0 * K;
    flip_sn = true;
    flip_cn = true;
  }
  if (v > K) {
    v = 2.0 * K - v;
    flip_cn = !flip_cn;
  }
  const JacobiTriple base = landen_first_quarter(v, m);
  return {sign * (flip_sn ? -base.sn : base.sn), flip_cn ? -base.cn : base.cn, base.dn};
}

double jacobi_am(double u, double m) {
  require_parameter(m, "jacobi_am");
  const double K = complete_K(m);
  const double half_periods = std::floor((u + K) / (2.0 * K));
  const JacobiTriple t = jacobi_sn_cn_dn(u - 2.0 * K * half_periods, m);
  return half_periods * kPi + std::atan2(t.sn, t.cn);
}

EllipticPoint elliptic_point(double u, double m) {
  const double K = complete_K(m);
  return {u, kPi * u / (2.0 * K), jacobi_am(u, m)};
}

double pythagorean_defect(const JacobiTriple& t, double m) {
  return std::max(std::abs(t.sn * t.sn + t.cn * t.cn - 1.0),
                  std::abs(m * t.sn * t.sn + t.dn * t.dn - 1.0));
}

double qseries_sn(double u, double m) {
  require_series_parameter(m, "qseries_sn");
  const NomeFrame f = nome_frame(u, m);
  const double prefactor = 2.0 * kPi / (f.K * std::sqrt(m));
  const double root_q = std::sqrt(f.q);
  double sum = 0.0;
  double q_n = 1.0;
  for (int n = 0; n < kSeriesCap; ++n) {
    const double coefficient = prefactor * root_q * q_n / (1.0 - f.q * q_n * q_n);
    sum += coefficient * std::sin((2 * n + 1) * f.z);
    if (std::abs(coefficient) < kSeriesTermBound) return sum;
    q_n *= f.q;
  }
  throw ConvergenceError("qseries_sn: 400 terms without meeting the term bound");
}

double qseries_cn(double u, double m) {
  require_series_parameter(m, "qseries_cn");
  return cn_series(u, m, CosineDenominator::kStandard);
}

double qseries_cn_misprinted(double u, double m) {
  require_series_parameter(m, "qseries_cn_misprinted");
  return cn_series(u, m, CosineDenominator::kMisprinted);
}

double qseries_dn(double u, double m) {
  require_series_parameter(m, "qseries_dn");
  const NomeFrame f = nome_frame(u, m);
  double sum = kPi / (2.0 * f.K);
  double q_n = f.q;
  for (int n = 1; n < kSeriesCap; ++n) {
    const double coefficient = 2.0 * kPi / f.K * q_n / (1.0 + q_n * q_n);
    sum += coefficient * std::cos(2.0 * n * f.z);
    if (std::abs(coefficient) < kSeriesTermBound) return sum;
    q_n *= f.q;
  }
  throw ConvergenceError("qseries_dn: 400 terms without meeting the term bound");
}

double inverse_sn(double s, double m) {
  require_parameter(m, "inverse_sn");
  if (!(std::abs(s) <= 1.0)) {
    throw DomainError("inverse_sn: |s| must not exceed 1, got " + std::to_string(s));
  }
  return incomplete_F(std::asin(s), m);
}

double inverse_dn(double x, double m) {
  require_parameter(m, "inverse_dn");
  const double kprime = std::sqrt(1.0 - m);
  constexpr double slack = 1e-15;
  if (!(x <= 1.0 + slack && x >= kprime - slack)) {
    throw DomainError("inverse_dn: x must lie in [k', 1], got " + std::to_string(x));
  }
  if (m == 0.0) return 0.0;
  x = std::clamp(x, kprime, 1.0);
  const double s = std::min(1.0, std::sqrt((1.0 - x) * (1.0 + x) / m));
  return incomplete_F(std::asin(s), m);
}

double nome_from_modulus(double m) {
  if (!(m > 0.0 && m < 1.0)) throw DomainError("nome_from_modulus: m must lie in (0, 1)");
  return std::exp(-kPi * complete_K(1.0 - m) / complete_K(m));
}

Modulus modulus_from_nome(double q) {
  if (!(q > 0.0 && q < 1.0)) throw DomainError("modulus_from_nome: q must lie in (0, 1)");
  // theta2 = 2 q^(1/4) sum q^(n(n+1)), theta3 = 1 + 2 sum q^(n^2).
  double theta2_sum = 0.0;
  double theta3 = 1.0;
  bool converged = false;
  for (int n = 0; n < kSeriesCap; ++n) {
    const double t2 = std::pow(q, static_cast<double>(n) * (n + 1));
    const double t3 = n == 0 ? 0.0 : 2.0 * std::pow(q, static_cast<double>(n) * n);
    theta2_sum += t2;
    theta3 += t3;
    if (n > 0 && t2 < kSeriesTermBound * theta2_sum && t3 < kSeriesTermBound * theta3) {
      converged = true;
      break;
    }
  }
  if (!converged) throw ConvergenceError("modulus_from_nome: theta series did not converge");
  const double theta2 = 2.0 * std::pow(q, 0.25) * theta2_sum;
  const double ratio = theta2 / theta3;
  return Modulus::from_k(ratio * ratio);
}

}  // namespace quintell
