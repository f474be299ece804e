#pragma once

#include <optional>
#include <vector>

#include "linerec/exactmath.hpp"
#include "linerec/graph.hpp"

namespace linerec {

/// Ordered lattice basis; each row of `vectors` is one basis vector in Z^ambient.
struct LatticeBasis {
  IntMatrix vectors;

  [[nodiscard]] std::size_t size() const noexcept { return vectors.rows(); }
  [[nodiscard]] std::size_t ambient() const noexcept { return vectors.cols(); }
  friend bool operator==(const LatticeBasis&, const LatticeBasis&) = default;
};

/// Lattice spanned by the columns of (I_m ; r^T): vector k is e_k with r_k appended.
/// [x; f] lies in it iff f = r . x.
LatticeBasis build_lattice(const LengthVector& r);

struct GramSchmidt {
  RatMatrix mu;                     // mu(i, j) for j < i
  std::vector<Rational> sq_norms;  // |b*_i|^2
};

/// Exact Gram-Schmidt data. Throws DependentInput if some |b*_i| vanishes.
GramSchmidt gram_schmidt(const LatticeBasis& basis);

/// LLL reduction with exact integer arithmetic (integral variant: only the Gram
/// determinants d_i and the scaled coefficients d_j mu_ij are stored). This is
/// the implementation the pipeline uses.
///
/// Requires 1/4 < delta < 1 (InvalidArgument otherwise) and independent input
/// vectors (DependentInput otherwise). Output spans the same lattice, is size
/// reduced and satisfies the Lovasz condition for delta.
LatticeBasis lll_reduce(const LatticeBasis& basis, const Rational& delta = Rational(3, 4));

/// Reference LLL over exact rationals, recomputing Gram-Schmidt after each swap.
/// Same control flow as lll_reduce, so both return identical bases.
LatticeBasis lll_reduce_rational(const LatticeBasis& basis, const Rational& delta = Rational(3, 4));

bool is_size_reduced(const GramSchmidt& gs);
bool satisfies_lovasz(const GramSchmidt& gs, const Rational& delta);
bool is_lll_reduced(const LatticeBasis& basis, const Rational& delta = Rational(3, 4));

/// U with to = U * from (rows as vectors), or nullopt if some vector of `to`
/// is outside the rational span of `from`. `from` must be independent.
std::optional<RatMatrix> change_of_basis(const LatticeBasis& from, const LatticeBasis& to);

}  // namespace linerec
