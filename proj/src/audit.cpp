#include "quintell/audit.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <limits>
#include <random>
#include <sstream>

#include "quintell/elliptic.hpp"
#include "quintell/errors.hpp"
#include "quintell/modular.hpp"
#include "quintell/multiangle.hpp"
#include "quintell/quintic.hpp"
#include "quintell/radical.hpp"
#include "quintell/recognize.hpp"
#include "quintell/trisection.hpp"

namespace quintell {

namespace {

using Claims = std::vector<Claim>;
using Rng = std::mt19937_64;

constexpr double kMissing = 1.0;  // residual recorded when an expected value is absent

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

struct RandomPoint {
  double u;
  double m;
};

// u in (0.01 K, 0.99 K), m in (0.02, 0.98).
RandomPoint random_point(Rng& rng) {
  const double m = uniform(rng, 0.02, 0.98);
  const double K = complete_K(m);
  return {uniform(rng, 0.01, 0.99) * K, m};
}

double max_component_gap(const JacobiTriple& a, const JacobiTriple& b) {
  return std::max({std::abs(a.sn - b.sn), std::abs(a.cn - b.cn), std::abs(a.dn - b.dn)});
}

// ---------------------------------------------------------------------------

Claims series_claims() {
  double sn = 0.0, cn = 0.0, cn_alt = 0.0, dn = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double m = 0.02 + 0.96 * i / 19.0;
    const double K = complete_K(m);
    for (int j = 0; j < 20; ++j) {
      const double u = -2.0 * K + 4.0 * K * j / 19.0;
      const JacobiTriple t = jacobi_sn_cn_dn(u, m);
      sn = std::max(sn, std::abs(qseries_sn(u, m) - t.sn));
      cn = std::max(cn, std::abs(qseries_cn(u, m) - t.cn));
      cn_alt = std::max(cn_alt, std::abs(qseries_cn_misprinted(u, m) - t.cn));
      dn = std::max(dn, std::abs(qseries_dn(u, m) - t.dn));
    }
  }
  double K_rel = 0.0;
  for (int i = 1; i <= 50; ++i) {
    const double m = 0.5 * i / 50.0;
    K_rel = std::max(K_rel, std::abs(hypergeometric_K(m) - complete_K(m)) / complete_K(m));
  }
  const std::string grid = "20x20 grid, m in [0.02, 0.98], u in [-2K, 2K]";
  return {
      make_claim("qseries.sn", "nome series for sn against Landen evaluation", sn, 1e-10, grid),
      make_claim("qseries.cn", "nome series for cn, denominator 1 + q^(2n+1), against Landen evaluation", cn,
                 1e-10, grid),
      make_claim("qseries.cn.printed-denominator",
                 "nome series for cn with the printed denominator 1 + q^(2n-1)", cn_alt, 1e-10,
                 grid + "; misprinted exponent, kept for the record", true),
      make_claim("qseries.dn", "nome series for dn against Landen evaluation", dn, 1e-10, grid),
      make_claim("K.hypergeometric", "K(m) from the AGM against the 2F1 series, relative, m in (0, 0.5]", K_rel,
                 1e-13),
  };
}

Claims multiple_angle_claims() {
  Rng rng(0x5eed0001);
  double dup = 0.0, tri_sn = 0.0, tri_cn = 0.0, tri_dn = 0.0, tri_dn_printed = 0.0;
  for (int i = 0; i < 500; ++i) {
    const RandomPoint p = random_point(rng);
    const Modulus mod = Modulus::from_parameter(p.m);
    const double k = mod.k();
    const JacobiTriple t1 = jacobi_sn_cn_dn(p.u, p.m);
    const JacobiTriple t2 = add_triples(t1, t1, k);
    const JacobiTriple t3 = add_triples(t2, t1, k);
    dup = std::max(dup, max_component_gap(duplication(t1.dn, k), t2));
    const JacobiTriple closed = triplication(t1.dn, k);
    tri_sn = std::max(tri_sn, std::abs(closed.sn - t3.sn));
    tri_cn = std::max(tri_cn, std::abs(closed.cn - t3.cn));
    tri_dn = std::max(tri_dn, std::abs(closed.dn - t3.dn));
    try {
      tri_dn_printed = std::max(tri_dn_printed, std::abs(triplication_dn_misprinted(t1.dn, k) - t3.dn));
    } catch (const SingularDenominator&) {
      tri_dn_printed = std::numeric_limits<double>::infinity();
    }
  }
  const std::string oracle = "500 random (u, m); oracle: addition formulas applied to u + u and 2u + u";
  return {
      make_claim("duplication", "sn, cn, dn of 2u from dn(u)", dup, 1e-10, oracle),
      make_claim("triplication.sn", "sn(3u) from dn(u)", tri_sn, 1e-10, oracle),
      make_claim("triplication.cn", "cn(3u) from dn(u)", tri_cn, 1e-10, oracle),
      make_claim("triplication.dn", "dn(3u) from dn(u) with the shared denominator", tri_dn, 1e-10, oracle),
      make_claim("triplication.dn.printed-denominator",
                 "dn(3u) with the printed denominator (k^2-1)^2 + 6(k^2-1)x^4 + 8x^6 - 7x^8", tri_dn_printed,
                 1e-10, oracle + "; the numerator is right, the shared denominator -D is what agrees", true),
  };
}

Claims quintic_claims() {
  Rng rng(0x5eed0002);
  double identity = 0.0, bracket = 0.0;
  int used = 0;
  while (used < 1000) {
    const double x = uniform(rng, 0.0, 1.0);
    const double k = uniform(rng, 0.0, 1.0);
    if (x == 0.0 || k == 0.0) continue;
    const double X = x * x;
    const double D = triplication_denominator(X, k);
    if (std::abs(D) < 1e-13) continue;
    const double h = std::sqrt(1.0 - X) / k * triplication_sn_numerator(X, k) / D;
    const QuinticFamily<double> f = build_family(x);
    identity = std::max(identity, quintic_residual(f, h, k));
    bracket = std::max(bracket, std::abs(D + leading_bracket(f, k)) / std::max(1.0, std::abs(D)));
    ++used;
  }
  return {
      make_claim("quintic.identity", "Y = k solves the quintic when h = sn(3u) is taken from its closed form",
                 identity, 1e-12, "1000 random (x, k) in (0,1)^2, coefficient-normalized residual"),
      make_claim("quintic.bracket", "d + b k^2 + k^4 equals minus the triplication denominator", bracket, 1e-12,
                 "same 1000 points"),
  };
}

Claims solve_claims() {
  Rng rng(0x5eed0003);
  double roundtrip = 0.0;
  int misses = 0;
  for (int i = 0; i < 100; ++i) {
    const RandomPoint p = random_point(rng);
    const double x = jacobi_sn_cn_dn(p.u, p.m).dn;
    const double h = jacobi_sn_cn_dn(3.0 * p.u, p.m).sn;
    const CandidateSet set = recover_modulus(x, h);
    double best = kMissing;
    for (const Candidate& c : set.candidates) best = std::min(best, std::abs(c.value - p.m));
    if (best >= kMissing) ++misses;
    roundtrip = std::max(roundtrip, best);
  }
  double co_roots = 0.0, product = 0.0;
  for (int i = 0; i < 50; ++i) {
    const RandomPoint p = random_point(rng);
    const SolveCertificate cert = elliptic_root_forward(p.u, p.m);
    co_roots = std::max(co_roots, cert.residual);
    for (double r : cert.co_root_residuals) co_roots = std::max(co_roots, r);
    const double x = jacobi_sn_cn_dn(p.u, p.m).dn;
    const double h = jacobi_sn_cn_dn(3.0 * p.u, p.m).sn;
    const QuinticFamily<double> f = build_family(x);
    const std::complex<double> expected = -f.e / h;
    product = std::max(product, std::abs(cert.root_product() - expected) / std::abs(expected));
  }
  return {
      make_claim("solve.roundtrip", "the modulus is recovered from (dn(u), sn(3u))", roundtrip, 1e-10,
                 "100 random (u, m); largest |m0 - m| over the nearest candidate; " + std::to_string(misses) +
                     " misses"),
      make_claim("solve.deflation", "all five roots of forward-generated quintics are certified", co_roots, 1e-10,
                 "50 random (u, m); largest normalized residual"),
      make_claim("solve.root-product", "product of the five roots equals -e/h", product, 1e-9,
                 "same 50 quintics, relative error"),
  };
}

Claims singular_claims() {
  const SingularModulus one = singular_modulus(Rational::make(1, 1));
  const SingularModulus five_thirds = singular_modulus(Rational::make(5, 3));
  const double radical = RadicalExpression::parse("sqrt(8 - sqrt(3/2*(27 - 7*sqrt(5))))/4").value();
  double worst = 0.0;
  std::string worst_r;
  for (const TableEntry& e : dn_third_table()) {
    const SingularModulus sm = singular_modulus(e.r);
    if (sm.defining_residual >= worst) {
      worst = sm.defining_residual;
      worst_r = e.r.to_string();
    }
  }
  const AlgebraicNote note = modulus_is_algebraic_note(Rational::make(1, 1));
  const bool exact = note.candidate && note.candidate->to_string() == "2*Y^2 - 1";
  return {
      make_claim("singular.r=1", "k_1 = 1/sqrt(2)", std::abs(one.k - std::sqrt(0.5)), 1e-13),
      make_claim("singular.r=5/3", "k_(5/3) equals (1/4) sqrt(8 - sqrt((3/2)(27 - 7 sqrt 5)))",
                 std::abs(five_thirds.k - radical), 1e-10, "radical " + format_number(radical)),
      make_claim("singular.defining-residual", "|K(1-m)/K(m) - sqrt(r)| for every tabulated r", worst, 1e-12,
                 "largest at r = " + worst_r),
      make_claim("singular.algebraic.r=1", "integer relation for k_1 is 2Y^2 - 1", exact ? 0.0 : kMissing, 0.5,
                 note.candidate ? "found " + note.candidate->to_string() : "none found"),
  };
}

Claims table_claims() {
  Claims claims = verify_dn_third_table();
  int passed = 0;
  std::string failed;
  for (const Claim& c : claims) {
    if (c.status == ClaimStatus::kPass) {
      ++passed;
    } else {
      failed += (failed.empty() ? "" : ", ") + c.id;
    }
  }
  const int total = static_cast<int>(claims.size());
  claims.push_back(make_claim("table.aggregate", "at least 20 of the 23 tabulated values agree to 1e-9",
                              static_cast<double>(total - passed), 3.5,
                              std::to_string(passed) + "/" + std::to_string(total) + " pass" +
                                  (failed.empty() ? "" : "; failing: " + failed)));
  return claims;
}

Claims dn_third_claims() {
  Claims claims;
  for (int i = 1; i <= 9; ++i) {
    const double k = i / 10.0;
    const Modulus mod = Modulus::from_k(k);
    const double direct = dn_third_numeric(mod.m());
    const double direct_sq = direct * direct;
    const std::string id = "dn-third.formula@k=0." + std::to_string(i);
    const std::string description = "nested-radical dn^2(K/3) against direct evaluation";
    double principal = std::numeric_limits<double>::infinity();
    std::string notes;
    try {
      principal = std::abs(dn_third_squared_closed_form(mod, OuterBranch::kPrincipal) - direct_sq);
      notes = "principal branch";
    } catch (const BranchError& e) {
      notes = std::string("principal branch fails: ") + e.what();
    }
    if (!(principal < 1e-9)) {
      try {
        const double reflected = std::abs(dn_third_squared_closed_form(mod, OuterBranch::kReflected) - direct_sq);
        notes += "; with the sign of the first square root flipped the deviation is " + format_number(reflected);
      } catch (const BranchError& e) {
        notes += std::string("; reflected branch fails too: ") + e.what();
      }
      if (!std::isfinite(principal)) principal = kMissing;
    }
    claims.push_back(make_claim(id, description, principal, 1e-9, notes, true));
  }

  bool monotone = true;
  double previous = 2.0;
  for (int i = 1; i <= 100; ++i) {
    const double m = i / 101.0;
    const double v = dn_third_numeric(m);
    if (!(v < previous)) monotone = false;
    previous = v;
  }
  claims.push_back(make_claim("dn-third.monotone", "m -> dn(K/3, m) is strictly decreasing on a 100-point grid",
                              monotone ? 0.0 : kMissing, 0.5));

  double from_quintic = 0.0;
  for (double k : {0.3, 0.5, 0.7, 0.9}) {
    const Modulus mod = Modulus::from_k(k);
    const CandidateSet set = dn_third_from_quintic(mod);
    const double direct = dn_third_numeric(mod.m());
    from_quintic = std::max(from_quintic, set.found() ? std::abs(set.candidates.front().value - direct) : kMissing);
  }
  claims.push_back(make_claim("dn-third.from-quintic",
                              "dn(K/3) from the quintic at h = 1, Y = k solved for X = dn^2", from_quintic, 1e-9,
                              "k in {0.3, 0.5, 0.7, 0.9}"));

  double inverse = 0.0;
  for (double k : {0.5, 0.9}) {
    const CandidateSet set = modulus_from_dn_third(dn_third_numeric(k * k));
    double best = kMissing;
    for (const Candidate& c : set.candidates) best = std::min(best, std::abs(c.value - k));
    inverse = std::max(inverse, best);
  }
  claims.push_back(make_claim("dn-third.inverse", "k recovered from the value of dn(K/3)", inverse, 1e-10,
                              "k in {0.5, 0.9}"));
  return claims;
}

Claims trisection_equation_claims() {
  double squared = 0.0, unsquared = 0.0, chosen = 0.0;
  for (int i = 0; i < 10; ++i) {
    for (int j = 0; j < 10; ++j) {
      const double h = 0.1 + 0.8 * i / 9.0;
      const double k = 0.1 + 0.8 * j / 9.0;
      const TrisectionSolution s = trisection_solution(h, Modulus::from_k(k));
      squared = std::max(squared, s.residual_squared);
      unsquared = std::max(unsquared, s.residual_unsquared);
      chosen = std::max(chosen, s.residual);
    }
  }
  const Modulus k06 = Modulus::from_k(0.6);
  const TrisectionSolution half = trisection_solution(0.5, k06);
  const double poly_sq = h_half_polynomial_residual(half.X_squared, 0.6);
  const double poly_un = h_half_polynomial_residual(half.X_unsquared, 0.6);
  return {
      make_claim("trisection-equation.grid", "X = dn^2(F(arcsin h)/3) solves the sn(3u) = h equation in X", chosen, 1e-9,
                 "10x10 grid (h, k) in [0.1, 0.9]^2; squared reading max residual " + format_number(squared)),
      make_claim("trisection-equation.unsquared", "the same equation with X = dn(F(arcsin h)/3)", unsquared, 1e-9,
                 "the solution is stated unsquared in one place; the squared form is the one that holds", true),
      make_claim("trisection-equation.h-half-polynomial", "the degree-15 polynomial printed for h = 1/2 vanishes at the solution",
                 std::min(poly_sq, poly_un), 1e-9,
                 "k = 0.6; normalized residual " + format_number(poly_sq) + " at X = dn^2, " + format_number(poly_un) +
                     " at X = dn",
                 true),
  };
}

Claims worked_claims() {
  Claims claims;
  // Worked example with x = 1/2 and k = 1/sqrt(2).
  {
    const double s3 = std::sqrt(3.0);
    const double h_printed = -33.0 * std::sqrt(1.5) / 37.0;
    const double Y = std::sqrt(0.5);
    for (const double sign : {1.0, -1.0}) {
      const double h = sign * h_printed;
      const RealPolynomial printed =
          make_polynomial<double>({243.0 * s3, -756.0 * h, -720.0 * s3, 1728.0 * h, 512.0 * s3, -1024.0 * h});
      claims.push_back(make_claim(std::string("worked.x=1/2.printed") + (sign > 0 ? "+h" : "-h"),
                                  "printed quintic vanishes at Y = 1/sqrt(2)", scaled_residual(printed, Y), 1e-9,
                                  "h = " + format_number(h) + "; raw value " + format_number(evaluate(printed, Y)),
                                  true));
    }
    const QuinticFamily<double> family = build_family(0.5);
    claims.push_back(make_claim("worked.x=1/2.family", "quintic built from x = 1/2 vanishes at Y = 1/sqrt(2)",
                                quintic_residual(family, h_printed, Y), 1e-9,
                                "coefficients e, d, c, b, a = " + format_number(family.e) + ", " +
                                    format_number(family.d) + ", " + format_number(family.c) + ", " +
                                    format_number(family.b) + ", " + format_number(family.a),
                                true));
    const double X = 0.25;
    const double h_closed = std::sqrt(1.0 - X) / Y * triplication_sn_numerator(X, Y) / triplication_denominator(X, Y);
    claims.push_back(make_claim("worked.x=1/2.h", "the stated h is the closed-form sn(3u) at x = 1/2, k = 1/sqrt(2)",
                                std::abs(h_closed - h_printed), 1e-12, "closed form " + format_number(h_closed),
                                true));
    claims.push_back(make_undetermined(
        "worked.x=1/2.real-regime", "dn(u, 1/2) = 1/2 for real u",
        "x = 1/2 lies below k' = 1/sqrt(2), so no real u has dn(u) = 1/2; the pair (x, h) is reached only "
        "through the algebraic continuation (complex u)",
        true));
  }
  // h = 1 and x = sqrt(2 + sqrt 3)/2.
  {
    const double x = RadicalExpression::parse("sqrt(2 + sqrt(3))/2").value(256).to_double();
    const double Y = RadicalExpression::parse("sqrt(8 - sqrt(3/2*(27 - 7*sqrt(5))))/4").value(256).to_double();
    const QuinticFamily<double> family = build_family(x);
    claims.push_back(make_claim("worked.r=5/3.family", "quintic built from x = sqrt(2 + sqrt 3)/2, h = 1 vanishes at k_(5/3)",
                                quintic_residual(family, 1.0, Y), 1e-9, "Y = " + format_number(Y), true));
    const double s2 = std::sqrt(2.0);
    const double s3 = std::sqrt(3.0);
    const RealPolynomial printed = make_polynomial<double>(
        {s2 * (-265.0 + 153.0 * s3), 500.0 - 288.0 * s3, -32.0 * s2 * (-17.0 + 9.0 * s3), 64.0 * (-16.0 + 9.0 * s3),
         -512.0 * s2, 1024.0});
    const RealPolynomial scaled = 1024.0 * family.coefficients(1.0);
    const double coefficient_gap = (printed - scaled).cwiseAbs().maxCoeff() / scaled.cwiseAbs().maxCoeff();
    claims.push_back(make_claim("worked.r=5/3.printed", "printed quintic vanishes at k_(5/3)", scaled_residual(printed, Y),
                                1e-9, "printed coefficients equal 1024 times the family, relative gap " +
                                          format_number(coefficient_gap),
                                true));
  }
  // h = 1 and x from the tabulated value at r = 34/3.
  {
    const TableEntry* entry = find_table_entry(Rational::make(34, 3));
    const double x = entry->expression.value(256).to_double();
    const SingularModulus sm = singular_modulus(Rational::make(34, 3));
    claims.push_back(make_claim("worked.r=34/3.family", "quintic built from the r = 34/3 value, h = 1 vanishes at k_(34/3)",
                                quintic_residual(build_family(x), 1.0, sm.k), 1e-9,
                                "k_(34/3) = " + format_number(sm.k), true));
    claims.push_back(make_claim("worked.r=34/3.table", "the r = 34/3 value equals dn(K/3, k_(34/3)^2)",
                                std::abs(x - dn_third_numeric(sm.m)), 1e-9, "", true));
    const BigReal alpha = singular_modulus_extended(Rational::make(34, 3), 512);
    const std::optional<AlgebraicCandidate> found = recognize(alpha, 8);
    const double bound = std::ldexp(1.0, -256);
    if (found) {
      const double residual = found->eval_residual.to_double();
      const bool shape = found->degree == 8 && found->palindromic_in_iy();
      claims.push_back(make_claim("worked.r=34/3.recognize", "k_(34/3) satisfies a symmetric octic",
                                  shape ? residual : kMissing, bound,
                                  "512 bits: " + found->to_string() + (shape ? "" : " (not symmetric under Y = iW)"),
                                  true));
    } else {
      claims.push_back(make_claim("worked.r=34/3.recognize", "k_(34/3) satisfies a symmetric octic", kMissing, bound,
                                  "no relation found at 512 bits, degree <= 8", true));
    }
  }
  return claims;
}

Claims inversion_claims() {
  Rng rng(0x5eed0004);
  double ratio = 0.0, pair = 0.0, quadruple = 0.0;
  for (int i = 0; i < 40; ++i) {
    const RandomPoint p = random_point(rng);
    const Modulus mod = Modulus::from_parameter(p.m);
    const double x1 = jacobi_sn_cn_dn(p.u, p.m).dn;
    const double x3 = jacobi_sn_cn_dn(3.0 * p.u, p.m).dn;
    const double x4 = jacobi_sn_cn_dn(4.0 * p.u, p.m).dn;
    const auto nearest = [](const CandidateSet& set, double want) {
      double best = kMissing;
      for (const Candidate& c : set.candidates) best = std::min(best, std::abs(c.value - want));
      return best;
    };
    ratio = std::max(ratio, nearest(dn3u_from_ratio(x1 / x3, mod), x3));
    pair = std::max(pair, nearest(modulus_from_dn_pair(x1, x3), mod.k()));
    quadruple = std::max(quadruple, nearest(modulus_from_dn_dn4(x1, x4), mod.k()));
  }
  double sd = 0.0;
  std::string sd_notes;
  for (double x : {0.9, 0.95}) {
    const CandidateSet set = modulus_from_sd_condition(x);
    double best = kMissing;
    for (const Candidate& c : set.candidates) best = std::min(best, c.residual);
    sd = std::max(sd, best);
    sd_notes += (sd_notes.empty() ? "" : "; ") + std::string("x = ") + format_number(x) + ": " +
                std::to_string(set.candidates.size()) + " moduli" +
                (set.found() ? ", first k = " + format_number(set.candidates.front().value) : "");
  }
  const std::string sample = "40 random (u, m), nearest candidate";
  return {
      make_claim("inversion.ratio", "dn(3u) from dn(u)/dn(3u) and k", ratio, 1e-9, sample),
      make_claim("inversion.dn-pair", "k from dn(u) and dn(3u)", pair, 1e-9, sample),
      make_claim("inversion.dn-dn4", "k from dn(u) and dn(4u)", quadruple, 1e-9, sample),
      make_claim("inversion.sd-condition", "k with sd(3u) = 1 - 9x^2 + 24x^4 - 16x^6 exists and is certified", sd,
                 1e-9, sd_notes),
  };
}

struct Group {
  std::vector<std::string> prefixes;
  std::function<Claims()> run;
};

const std::vector<Group>& groups() {
  static const std::vector<Group> all = {
      {{"qseries", "K."}, series_claims},
      {{"duplication", "triplication"}, multiple_angle_claims},
      {{"quintic"}, quintic_claims},
      {{"solve"}, solve_claims},
      {{"singular"}, singular_claims},
      {{"table"}, table_claims},
      {{"dn-third"}, dn_third_claims},
      {{"trisection-equation"}, trisection_equation_claims},
      {{"worked"}, worked_claims},
      {{"inversion"}, inversion_claims},
  };
  return all;
}

bool may_match(const std::string& prefix, const std::string& filter) {
  return prefix.rfind(filter, 0) == 0 || filter.rfind(prefix, 0) == 0;
}

}  // namespace

std::vector<std::string> audit_prefixes() {
  std::vector<std::string> out;
  for (const Group& g : groups()) out.insert(out.end(), g.prefixes.begin(), g.prefixes.end());
  return out;
}

ClaimsReport run_audit(const AuditOptions& options) {
  std::vector<std::future<Claims>> pending;
  for (const Group& g : groups()) {
    const bool wanted = options.only.empty() ||
                        std::any_of(g.prefixes.begin(), g.prefixes.end(),
                                    [&](const std::string& p) { return may_match(p, options.only); });
    if (wanted) pending.push_back(std::async(std::launch::async, g.run));
  }
  ClaimsReport report{QUINTELL_VERSION, utc_timestamp(), {}};
  for (auto& f : pending) {
    for (Claim& c : f.get()) {
      if (options.only.empty() || c.id.rfind(options.only, 0) == 0) report.claims.push_back(std::move(c));
    }
  }
  return report;
}

}  // namespace quintell
