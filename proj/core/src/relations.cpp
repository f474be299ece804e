#include "linerec/relations.hpp"

#include <algorithm>
#include <numeric>

#include "linerec/error.hpp"

namespace linerec {

BigInt medium_threshold_squared(std::size_t m) {
  BigInt t = 1;
  t <<= static_cast<mp_bitcnt_t>(m);
  return t * static_cast<unsigned long>(2 * m);
}

std::size_t count_medium_vectors(const LatticeBasis& reduced, std::size_t m) {
  const BigInt threshold = medium_threshold_squared(m);
  std::size_t count = 0;
  for (std::size_t i = 0; i < reduced.size(); ++i)
    if (squared_norm(reduced.vectors.row(i)) <= threshold) ++count;
  return count;
}

namespace {

CycleSpaceBasis basis_from_selected(std::vector<std::size_t> selected, LatticeBasis reduced, std::size_t medium) {
  const std::size_t m = reduced.ambient() - 1;
  CycleSpaceBasis out;
  out.augmented = IntMatrix(0, m + 1);
  RatMatrix truncated(0, m);
  for (auto i : selected) {
    out.augmented.append_row(reduced.vectors.row(i));
    std::vector<Rational> x;
    x.reserve(m);
    for (std::size_t c = 0; c < m; ++c) x.emplace_back(reduced.vectors(i, c));
    truncated.append_row(x);
  }
  out.rows = canonical_row_basis(truncated);
  out.reduced = std::move(reduced);
  out.medium_count = medium;
  return out;
}

}  // namespace

CycleSpaceBasis relations_from_reduced(LatticeBasis reduced, const RelationOptions& options) {
  const std::size_t m = reduced.ambient() - 1;
  const std::size_t medium = count_medium_vectors(reduced, m);
  std::vector<std::size_t> selected;

  if (options.keep_shortest) {
    std::vector<std::size_t> order(reduced.size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<BigInt> norms;
    for (std::size_t i = 0; i < reduced.size(); ++i) norms.push_back(squared_norm(reduced.vectors.row(i)));
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return norms[a] < norms[b]; });
    const std::size_t keep = std::min(*options.keep_shortest, order.size());
    selected.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(keep));
    std::sort(selected.begin(), selected.end());
  } else {
    const BigInt threshold = medium_threshold_squared(m);
    for (std::size_t i = 0; i < reduced.size(); ++i)
      if (squared_norm(reduced.vectors.row(i)) <= threshold) selected.push_back(i);
    if (selected.empty())
      throw Error(Failure::NoMediumVectors, "no reduced vector within sqrt(2m) 2^(m/2) for m = " + std::to_string(m));
  }
  return basis_from_selected(std::move(selected), std::move(reduced), medium);
}

CycleSpaceBasis compute_relations(const LengthVector& l, const RelationOptions& options) {
  if (l.empty()) throw Error(Failure::InvalidArgument, "length vector is empty");
  return relations_from_reduced(lll_reduce(build_lattice(l), options.delta), options);
}

namespace {

/// Incrementally maintained reduced row basis over the rationals.
class RowSpace {
 public:
  explicit RowSpace(std::size_t cols) : cols_(cols) {}

  /// Adds v if independent of the rows so far; returns whether it was added.
  bool insert(const std::vector<Rational>& v) {
    std::vector<Rational> r = v;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational f = r[pivots_[i]];
      if (sgn(f) == 0) continue;
      for (std::size_t c = 0; c < cols_; ++c) r[c] -= f * rows_[i][c];
    }
    const auto it = std::find_if(r.begin(), r.end(), [](const Rational& x) { return sgn(x) != 0; });
    if (it == r.end()) return false;
    const std::size_t pivot = static_cast<std::size_t>(it - r.begin());
    const Rational inv = 1 / r[pivot];
    for (auto& x : r) x *= inv;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational f = rows_[i][pivot];
      if (sgn(f) == 0) continue;
      for (std::size_t c = 0; c < cols_; ++c) rows_[i][c] -= f * r[c];
    }
    rows_.push_back(std::move(r));
    pivots_.push_back(pivot);
    return true;
  }

 private:
  std::size_t cols_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace

CycleSpaceBasis kbasis_relations(const LengthVector& l, std::size_t k, std::optional<std::size_t> noise_allowance) {
  if (k < 3) throw Error(Failure::InvalidArgument, "k-basis search needs k >= 3");
  const std::size_t m = l.size();
  const BigInt allowance = static_cast<unsigned long>(noise_allowance.value_or(k));

  RowSpace space(m);
  IntMatrix found(0, m);
  RatMatrix found_rational(0, m);
  std::vector<std::size_t> subset;

  // Enumerate subsets of each size s in lexicographic order, then sign patterns
  // with the first chosen coordinate fixed to +1.
  auto visit_subset = [&]() {
    const std::size_t s = subset.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << (s - 1)); ++mask) {
      BigInt sum = l[subset[0]];
      for (std::size_t t = 1; t < s; ++t) {
        if (mask >> (t - 1) & 1U) sum -= l[subset[t]];
        else sum += l[subset[t]];
      }
      if (abs(sum) > allowance) continue;
      std::vector<Rational> v(m, Rational(0));
      v[subset[0]] = 1;
      for (std::size_t t = 1; t < s; ++t) v[subset[t]] = (mask >> (t - 1) & 1U) ? -1 : 1;
      if (space.insert(v)) {
        std::vector<BigInt> row(m);
        for (std::size_t c = 0; c < m; ++c) row[c] = v[c].get_num();
        found.append_row(row);
        found_rational.append_row(v);
      }
    }
  };

  for (std::size_t s = 1; s <= std::min(k, m); ++s) {
    subset.resize(s);
    std::iota(subset.begin(), subset.end(), 0);
    while (true) {
      visit_subset();
      std::size_t i = s;
      while (i > 0 && subset[i - 1] == m - s + i - 1) --i;
      if (i == 0) break;
      ++subset[i - 1];
      for (std::size_t j = i; j < s; ++j) subset[j] = subset[j - 1] + 1;
    }
  }
  if (found.rows() == 0) throw Error(Failure::NoRelationsFound, "no {-1,0,1} relation with at most " + std::to_string(k) + " nonzeros");

  CycleSpaceBasis out;
  out.rows = canonical_row_basis(found_rational);
  out.augmented = IntMatrix(0, m + 1);
  for (std::size_t i = 0; i < found.rows(); ++i) {
    std::vector<BigInt> aug = found.row_vector(i);
    aug.push_back(dot(found.row(i), l));
    out.augmented.append_row(aug);
  }
  out.medium_count = found.rows();
  return out;
}

bool spans_cycle_space(const IntMatrix& rows, const Graph& g, const Orientation& sigma) {
  if (rows.cols() != g.m()) return false;
  if (rows.rows() + g.n() != g.m() + 1) return false;
  if (rank(rows) != rows.rows()) return false;
  const IntMatrix product = multiply(rows, incidence_matrix(g, sigma));
  for (std::size_t i = 0; i < product.rows(); ++i)
    for (std::size_t j = 0; j < product.cols(); ++j)
      if (sgn(product(i, j)) != 0) return false;
  return true;
}

}  // namespace linerec
