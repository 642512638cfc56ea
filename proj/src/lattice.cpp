#include "quintell/lattice.hpp"

#include <cstddef>
#include <utility>

#include "quintell/errors.hpp"

namespace quintell {

namespace {

mpz_class dot(const IntegerRow& a, const IntegerRow& b) {
  mpz_class s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Integral Gram-Schmidt state, 1-based as in the textbook formulation:
// d[0] = 1, d[i] = Gram determinant of the first i rows, and
// lambda[i][j] = d[j] * mu[i][j] for j < i.
class IntegralLll {
 public:
  explicit IntegralLll(std::vector<IntegerRow>& rows)
      : b_(rows), n_(rows.size()), d_(n_ + 1), lambda_(n_ + 1, IntegerRow(n_ + 1)) {}

  void run() {
    if (n_ < 2) return;
    d_[0] = 1;
    d_[1] = dot(row(1), row(1));
    if (d_[1] == 0) throw DomainError("lll_reduce: zero row");
    std::size_t k = 2;
    std::size_t kmax = 1;
    while (k <= n_) {
      if (k > kmax) {
        kmax = k;
        extend_gram_schmidt(k);
      }
      reduce(k, k - 1);
      // Lovasz condition with delta = 3/4, cleared of denominators.
      const mpz_class& lam = lambda_[k][k - 1];
      if (4 * d_[k] * d_[k - 2] < 3 * d_[k - 1] * d_[k - 1] - 4 * lam * lam) {
        swap(k, kmax);
        if (k > 2) --k;
        continue;
      }
      for (std::size_t l = k - 1; l-- > 1;) reduce(k, l);
      ++k;
    }
  }

 private:
  IntegerRow& row(std::size_t i) { return b_[i - 1]; }

  void extend_gram_schmidt(std::size_t k) {
    for (std::size_t j = 1; j <= k; ++j) {
      mpz_class u = dot(row(k), row(j));
      for (std::size_t i = 1; i < j; ++i) {
        u = (d_[i] * u - lambda_[k][i] * lambda_[j][i]);
        mpz_divexact(u.get_mpz_t(), u.get_mpz_t(), d_[i - 1].get_mpz_t());
      }
      if (j < k) {
        lambda_[k][j] = u;
      } else {
        if (u == 0) throw DomainError("lll_reduce: rows are linearly dependent");
        d_[k] = u;
      }
    }
  }

  void reduce(std::size_t k, std::size_t l) {
    mpz_class twice = 2 * lambda_[k][l];
    if (abs(twice) <= d_[l]) return;
    // q = nearest integer to lambda / d.
    mpz_class q = twice + d_[l];
    mpz_class denom = 2 * d_[l];
    mpz_fdiv_q(q.get_mpz_t(), q.get_mpz_t(), denom.get_mpz_t());
    IntegerRow& bk = row(k);
    const IntegerRow& bl = row(l);
    for (std::size_t i = 0; i < bk.size(); ++i) bk[i] -= q * bl[i];
    lambda_[k][l] -= q * d_[l];
    for (std::size_t i = 1; i < l; ++i) lambda_[k][i] -= q * lambda_[l][i];
  }

  void swap(std::size_t k, std::size_t kmax) {
    std::swap(row(k), row(k - 1));
    for (std::size_t j = 1; j + 2 <= k; ++j) std::swap(lambda_[k][j], lambda_[k - 1][j]);
    const mpz_class lam = lambda_[k][k - 1];
    mpz_class big_b = d_[k - 2] * d_[k] + lam * lam;
    mpz_divexact(big_b.get_mpz_t(), big_b.get_mpz_t(), d_[k - 1].get_mpz_t());
    for (std::size_t i = k + 1; i <= kmax; ++i) {
      const mpz_class t = lambda_[i][k];
      mpz_class next = d_[k] * lambda_[i][k - 1] - lam * t;
      mpz_divexact(next.get_mpz_t(), next.get_mpz_t(), d_[k - 1].get_mpz_t());
      lambda_[i][k] = next;
      mpz_class prev = big_b * t + lam * lambda_[i][k];
      mpz_divexact(prev.get_mpz_t(), prev.get_mpz_t(), d_[k].get_mpz_t());
      lambda_[i][k - 1] = prev;
    }
    d_[k - 1] = big_b;
  }

  std::vector<IntegerRow>& b_;
  std::size_t n_;
  IntegerRow d_;
  std::vector<IntegerRow> lambda_;
};

}  // namespace

void lll_reduce(std::vector<IntegerRow>& basis) {
  if (basis.empty()) return;
  const std::size_t width = basis.front().size();
  for (const IntegerRow& r : basis) {
    if (r.size() != width) throw DomainError("lll_reduce: rows differ in length");
  }
  if (basis.size() > width) throw DomainError("lll_reduce: more rows than columns");
  IntegralLll(basis).run();
}

mpz_class squared_norm(const IntegerRow& row) { return dot(row, row); }

}  // namespace quintell
