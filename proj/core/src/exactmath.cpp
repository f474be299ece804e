#include "linerec/exactmath.hpp"

#include <algorithm>
#include <numeric>

namespace linerec {

Echelon echelon(RatMatrix m) {
  Echelon out;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t lead = 0;
  for (std::size_t col = 0; col < cols && lead < rows; ++col) {
    std::size_t pivot = lead;
    while (pivot < rows && sgn(m(pivot, col)) == 0) ++pivot;
    if (pivot == rows) continue;
    m.swap_rows(pivot, lead);

    const Rational inv = 1 / m(lead, col);
    for (std::size_t j = col; j < cols; ++j) m(lead, j) *= inv;

    for (std::size_t i = 0; i < rows; ++i) {
      if (i == lead || sgn(m(i, col)) == 0) continue;
      const Rational factor = m(i, col);
      for (std::size_t j = col; j < cols; ++j) m(i, j) -= factor * m(lead, j);
    }
    out.pivots.push_back(col);
    ++lead;
  }
  out.reduced = std::move(m);
  return out;
}

RatMatrix rref(const RatMatrix& m) { return echelon(m).reduced; }

std::size_t rank(const RatMatrix& m) { return echelon(m).pivots.size(); }

std::size_t rank(const IntMatrix& input) {
  IntMatrix m = input;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  BigInt prev = 1;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t pivot = r;
    while (pivot < rows && sgn(m(pivot, col)) == 0) ++pivot;
    if (pivot == rows) continue;
    m.swap_rows(pivot, r);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        BigInt v = m(r, col) * m(i, j) - m(i, col) * m(r, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = std::move(v);
      }
      m(i, col) = 0;
    }
    prev = m(r, col);
    ++r;
  }
  return r;
}

RatMatrix right_kernel_basis(const RatMatrix& m) {
  const Echelon e = echelon(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;

  RatMatrix basis(0, cols);
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> x(cols, Rational(0));
    x[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = -e.reduced(r, f);
    basis.append_row(x);
  }
  return basis;
}

Rational determinant(RatMatrix m) {
  assert(m.rows() == m.cols());
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(m(pivot, col)) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      m.swap_rows(pivot, col);
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (sgn(m(i, col)) == 0) continue;
      const Rational factor = m(i, col) / m(col, col);
      for (std::size_t j = col; j < n; ++j) m(i, j) -= factor * m(col, j);
    }
  }
  return det;
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  return out;
}

IntMatrix transpose(const IntMatrix& m) {
  IntMatrix out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = m(i, j);
  return out;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  assert(a.cols() == b.rows());
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

namespace {

template <typename T>
Matrix<T> select_columns_impl(const Matrix<T>& m, std::span<const std::size_t> columns) {
  Matrix<T> out(m.rows(), columns.size());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < columns.size(); ++j) out(i, j) = m(i, columns[j]);
  return out;
}

}  // namespace

IntMatrix select_columns(const IntMatrix& m, std::span<const std::size_t> columns) {
  return select_columns_impl(m, columns);
}

RatMatrix select_columns(const RatMatrix& m, std::span<const std::size_t> columns) {
  return select_columns_impl(m, columns);
}

BigInt dot(std::span<const BigInt> a, std::span<const BigInt> b) {
  assert(a.size() == b.size());
  BigInt s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

BigInt squared_norm(std::span<const BigInt> v) { return dot(v, v); }

std::vector<BigInt> primitive_integer_vector(std::span<const Rational> v) {
  BigInt lcm_den = 1;
  for (const auto& x : v) lcm_den = lcm(lcm_den, BigInt(x.get_den()));
  std::vector<BigInt> out;
  out.reserve(v.size());
  BigInt g = 0;
  for (const auto& x : v) {
    BigInt scaled = x.get_num() * (lcm_den / x.get_den());
    g = gcd(g, scaled);
    out.push_back(std::move(scaled));
  }
  if (g == 0) return out;
  const auto first = std::find_if(out.begin(), out.end(), [](const BigInt& x) { return sgn(x) != 0; });
  if (sgn(*first) < 0) g = -g;
  for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return out;
}

IntMatrix canonical_row_basis(const RatMatrix& m) {
  const Echelon e = echelon(m);
  IntMatrix out(0, m.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) out.append_row(primitive_integer_vector(e.reduced.row(r)));
  return out;
}

BigInt round_nearest(const Rational& x) {
  Rational shifted = x + Rational(1, 2);
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
  return out;
}

}  // namespace linerec
