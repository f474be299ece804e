#pragma once

#include <gmpxx.h>

#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

namespace linerec {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Dense row-major matrix over an exact scalar type.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      assert(r.size() == cols_);
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols) {
    Matrix out(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      assert(rows[i].size() == cols);
      for (std::size_t j = 0; j < cols; ++j) out(i, j) = rows[i][j];
    }
    return out;
  }

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] bool empty() const noexcept { return rows_ == 0; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  [[nodiscard]] std::vector<T> row_vector(std::size_t r) const {
    auto s = row(r);
    return {s.begin(), s.end()};
  }

  void append_row(std::span<const T> values) {
    if (rows_ == 0 && cols_ == 0) cols_ = values.size();
    assert(values.size() == cols_);
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<BigInt>;
using RatMatrix = Matrix<Rational>;

template <typename T>
std::ostream& operator<<(std::ostream& os, const Matrix<T>& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << '(';
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j);
    os << ")\n";
  }
  return os;
}

/// Reduced row-echelon form plus the pivot column of each nonzero row.
struct Echelon {
  RatMatrix reduced;
  std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination. Pivots are chosen leftmost column first, topmost
/// nonzero row within it; zero rows end up at the bottom.
Echelon echelon(RatMatrix m);

RatMatrix rref(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);
/// Fraction-free (Bareiss) rank; avoids rational normalisation costs.
std::size_t rank(const IntMatrix& m);

/// Rows form a basis of { x : M x = 0 }. One row per free column f of rref(M):
/// x_f = 1, other free coordinates 0, pivot coordinates solved.
RatMatrix right_kernel_basis(const RatMatrix& m);

Rational determinant(RatMatrix m);

RatMatrix to_rational(const IntMatrix& m);
IntMatrix transpose(const IntMatrix& m);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntMatrix select_columns(const IntMatrix& m, std::span<const std::size_t> columns);
RatMatrix select_columns(const RatMatrix& m, std::span<const std::size_t> columns);

BigInt dot(std::span<const BigInt> a, std::span<const BigInt> b);
BigInt squared_norm(std::span<const BigInt> v);

/// Scales a rational vector to the unique primitive integer vector on the same
/// ray whose first nonzero entry is positive. The zero vector maps to zeros.
std::vector<BigInt> primitive_integer_vector(std::span<const Rational> v);

/// Canonical integer basis of the row space: nonzero rows of rref(M), each
/// scaled by primitive_integer_vector.
IntMatrix canonical_row_basis(const RatMatrix& m);

/// Nearest integer, halves rounded toward +infinity.
BigInt round_nearest(const Rational& x);

}  // namespace linerec
