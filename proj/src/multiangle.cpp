#include "quintell/multiangle.hpp"

namespace quintell {

namespace {

void require_real_regime(double x, const Modulus& k, const char* where) {
  constexpr double slack = 1e-15;
  if (!(x >= k.kprime() - slack && x <= 1.0 + slack)) {
    throw DomainError(std::string(where) + ": x = dn(u) must lie in [k', 1] = [" +
                      std::to_string(k.kprime()) + ", 1], got " + std::to_string(x));
  }
}

void require_triple(const JacobiTriple& t, const Modulus& k, const char* where) {
  if (!(pythagorean_defect(t, k.m()) <= 1e-10)) {
    throw DomainError(std::string(where) + ": triple violates sn^2+cn^2=1 or k^2 sn^2+dn^2=1");
  }
}

}  // namespace

JacobiTriple triple_from_dn(double x, const Modulus& k) {
  require_real_regime(x, k, "triple_from_dn");
  return parametrize_dn(x, k.k()).triple();
}

JacobiTriple duplication_from_dn(double x, const Modulus& k) {
  require_real_regime(x, k, "duplication_from_dn");
  return duplication(x, k.k());
}

JacobiTriple triplication_from_dn(double x, const Modulus& k) {
  require_real_regime(x, k, "triplication_from_dn");
  return triplication(x, k.k());
}

double dn_4u_from_dn(double x, const Modulus& k) {
  require_real_regime(x, k, "dn_4u_from_dn");
  return dn_quadruple(x, k.k());
}

double sd_3u(double x, const Modulus& k) {
  require_real_regime(x, k, "sd_3u");
  return sd_triple(x, k.k());
}

double addition_sn(const JacobiTriple& t1, const JacobiTriple& t2, const Modulus& k) {
  require_triple(t1, k, "addition_sn");
  require_triple(t2, k, "addition_sn");
  return addition_sn(t1, t2, k.k());
}

double addition_cn(const JacobiTriple& t1, const JacobiTriple& t2, const Modulus& k) {
  require_triple(t1, k, "addition_cn");
  require_triple(t2, k, "addition_cn");
  return addition_cn(t1, t2, k.k());
}

double addition_dn(const JacobiTriple& t1, const JacobiTriple& t2, const Modulus& k) {
  require_triple(t1, k, "addition_dn");
  require_triple(t2, k, "addition_dn");
  return addition_dn(t1, t2, k.k());
}

}  // namespace quintell
