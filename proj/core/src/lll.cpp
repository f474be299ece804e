#include "linerec/lll.hpp"

#include <algorithm>

#include "linerec/error.hpp"

namespace linerec {

LatticeBasis build_lattice(const LengthVector& r) {
  const std::size_t m = r.size();
  LatticeBasis out{IntMatrix(m, m + 1)};
  for (std::size_t k = 0; k < m; ++k) {
    out.vectors(k, k) = 1;
    out.vectors(k, m) = r[k];
  }
  return out;
}

GramSchmidt gram_schmidt(const LatticeBasis& basis) {
  const std::size_t n = basis.size();
  const std::size_t dim = basis.ambient();
  GramSchmidt gs{RatMatrix(n, n), std::vector<Rational>(n)};
  std::vector<std::vector<Rational>> star(n, std::vector<Rational>(dim));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < dim; ++c) star[i][c] = basis.vectors(i, c);
    for (std::size_t j = 0; j < i; ++j) {
      Rational num = 0;
      for (std::size_t c = 0; c < dim; ++c) num += Rational(basis.vectors(i, c)) * star[j][c];
      gs.mu(i, j) = num / gs.sq_norms[j];
      for (std::size_t c = 0; c < dim; ++c) star[i][c] -= gs.mu(i, j) * star[j][c];
    }
    Rational sq = 0;
    for (std::size_t c = 0; c < dim; ++c) sq += star[i][c] * star[i][c];
    if (sgn(sq) == 0) throw Error(Failure::DependentInput, "basis vector " + std::to_string(i) + " is dependent");
    gs.sq_norms[i] = sq;
  }
  return gs;
}

namespace {

void check_delta(const Rational& delta) {
  if (!(delta > Rational(1, 4) && delta < 1)) throw Error(Failure::InvalidArgument, "delta must lie in (1/4, 1)");
}

void subtract_multiple(IntMatrix& b, std::size_t target, std::size_t source, const BigInt& q) {
  for (std::size_t c = 0; c < b.cols(); ++c) b(target, c) -= q * b(source, c);
}

// Nearest integer to num/den (den > 0), halves toward +infinity.
BigInt round_quotient(const BigInt& num, const BigInt& den) {
  BigInt twice = 2 * num + den;
  BigInt out;
  BigInt den2 = 2 * den;
  mpz_fdiv_q(out.get_mpz_t(), twice.get_mpz_t(), den2.get_mpz_t());
  return out;
}

void exact_div(BigInt& x, const BigInt& d) { mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t()); }

/// Integral LLL state with Cohen's 1-based indexing: vector i is row i-1 of b.
class IntegralLll {
 public:
  IntegralLll(IntMatrix basis, const Rational& delta)
      : b_(std::move(basis)),
        n_(b_.rows()),
        p_(delta.get_num()),
        q_(delta.get_den()),
        d_(n_ + 1),
        lambda_(n_ + 1, std::vector<BigInt>(n_ + 1)) {}

  IntMatrix run() {
    if (n_ == 0) return std::move(b_);
    d_[0] = 1;
    d_[1] = inner(1, 1);
    if (sgn(d_[1]) == 0) throw Error(Failure::DependentInput, "zero basis vector");
    std::size_t k = 2;
    std::size_t kmax = 1;
    while (k <= n_) {
      if (k > kmax) {
        kmax = k;
        incremental_gram_schmidt(k);
      }
      reduce(k, k - 1);
      const BigInt& lam = lambda_[k][k - 1];
      if (q_ * (d_[k] * d_[k - 2] + lam * lam) < p_ * d_[k - 1] * d_[k - 1]) {
        swap(k, kmax);
        k = std::max<std::size_t>(2, k - 1);
      } else {
        for (std::size_t l = k - 1; l-- > 1;) reduce(k, l);
        ++k;
      }
    }
    return std::move(b_);
  }

 private:
  BigInt inner(std::size_t i, std::size_t j) const { return dot(b_.row(i - 1), b_.row(j - 1)); }

  void incremental_gram_schmidt(std::size_t k) {
    for (std::size_t j = 1; j <= k; ++j) {
      BigInt u = inner(k, j);
      for (std::size_t i = 1; i < j; ++i) {
        u = d_[i] * u - lambda_[k][i] * lambda_[j][i];
        exact_div(u, d_[i - 1]);
      }
      if (j < k) {
        lambda_[k][j] = std::move(u);
      } else {
        if (sgn(u) == 0) throw Error(Failure::DependentInput, "basis vector " + std::to_string(k - 1) + " is dependent");
        d_[k] = std::move(u);
      }
    }
  }

  void reduce(std::size_t k, std::size_t l) {
    BigInt& lam = lambda_[k][l];
    if (2 * abs(lam) <= d_[l]) return;
    const BigInt q = round_quotient(lam, d_[l]);
    subtract_multiple(b_, k - 1, l - 1, q);
    lam -= q * d_[l];
    for (std::size_t i = 1; i < l; ++i) lambda_[k][i] -= q * lambda_[l][i];
  }

  void swap(std::size_t k, std::size_t kmax) {
    b_.swap_rows(k - 1, k - 2);
    for (std::size_t j = 1; j + 2 <= k; ++j) std::swap(lambda_[k][j], lambda_[k - 1][j]);
    const BigInt lam = lambda_[k][k - 1];
    BigInt big_b = d_[k - 2] * d_[k] + lam * lam;
    exact_div(big_b, d_[k - 1]);
    for (std::size_t i = k + 1; i <= kmax; ++i) {
      const BigInt t = lambda_[i][k];
      BigInt upper = d_[k] * lambda_[i][k - 1] - lam * t;
      exact_div(upper, d_[k - 1]);
      lambda_[i][k] = std::move(upper);
      BigInt lower = big_b * t + lam * lambda_[i][k];
      exact_div(lower, d_[k]);
      lambda_[i][k - 1] = std::move(lower);
    }
    d_[k - 1] = std::move(big_b);
  }

  IntMatrix b_;
  std::size_t n_;
  BigInt p_;
  BigInt q_;
  std::vector<BigInt> d_;
  std::vector<std::vector<BigInt>> lambda_;
};

}  // namespace

LatticeBasis lll_reduce(const LatticeBasis& basis, const Rational& delta) {
  check_delta(delta);
  return LatticeBasis{IntegralLll(basis.vectors, delta).run()};
}

LatticeBasis lll_reduce_rational(const LatticeBasis& basis, const Rational& delta) {
  check_delta(delta);
  LatticeBasis b = basis;
  const std::size_t n = b.size();
  if (n == 0) return b;
  GramSchmidt gs = gram_schmidt(b);

  auto reduce = [&](std::size_t k, std::size_t l) {
    const Rational& mu = gs.mu(k, l);
    if (abs(mu) <= Rational(1, 2)) return;
    const BigInt q = round_nearest(mu);
    subtract_multiple(b.vectors, k, l, q);
    for (std::size_t i = 0; i < l; ++i) gs.mu(k, i) -= q * gs.mu(l, i);
    gs.mu(k, l) -= q;
  };

  std::size_t k = 1;
  while (k < n) {
    reduce(k, k - 1);
    const Rational& mu = gs.mu(k, k - 1);
    if (gs.sq_norms[k] < (delta - mu * mu) * gs.sq_norms[k - 1]) {
      b.vectors.swap_rows(k, k - 1);
      gs = gram_schmidt(b);
      k = std::max<std::size_t>(1, k - 1);
    } else {
      for (std::size_t l = k - 1; l-- > 0;) reduce(k, l);
      ++k;
    }
  }
  return b;
}

bool is_size_reduced(const GramSchmidt& gs) {
  for (std::size_t i = 0; i < gs.mu.rows(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (abs(gs.mu(i, j)) > Rational(1, 2)) return false;
  return true;
}

bool satisfies_lovasz(const GramSchmidt& gs, const Rational& delta) {
  for (std::size_t k = 1; k < gs.sq_norms.size(); ++k) {
    const Rational& mu = gs.mu(k, k - 1);
    if (gs.sq_norms[k] < (delta - mu * mu) * gs.sq_norms[k - 1]) return false;
  }
  return true;
}

bool is_lll_reduced(const LatticeBasis& basis, const Rational& delta) {
  const GramSchmidt gs = gram_schmidt(basis);
  return is_size_reduced(gs) && satisfies_lovasz(gs, delta);
}

std::optional<RatMatrix> change_of_basis(const LatticeBasis& from, const LatticeBasis& to) {
  const std::size_t d = from.size();
  const std::size_t dim = from.ambient();
  const std::size_t targets = to.size();
  // Solve from^T x = t^T for every target t at once.
  RatMatrix augmented(dim, d + targets);
  for (std::size_t c = 0; c < dim; ++c) {
    for (std::size_t i = 0; i < d; ++i) augmented(c, i) = from.vectors(i, c);
    for (std::size_t t = 0; t < targets; ++t) augmented(c, d + t) = to.vectors(t, c);
  }
  const Echelon e = echelon(augmented);
  if (e.pivots.size() < d || (e.pivots.size() > d)) {
    // Fewer pivots: `from` dependent. More: some target outside the span.
    return std::nullopt;
  }
  for (std::size_t i = 0; i < d; ++i)
    if (e.pivots[i] != i) return std::nullopt;

  RatMatrix u(targets, d);
  for (std::size_t t = 0; t < targets; ++t)
    for (std::size_t i = 0; i < d; ++i) u(t, i) = e.reduced(i, d + t);
  return u;
}

}  // namespace linerec
