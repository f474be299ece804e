#pragma once

#include <cstddef>
#include <optional>

#include "linerec/exactmath.hpp"
#include "linerec/graph.hpp"
#include "linerec/lll.hpp"

namespace linerec {

/// Recovered basis of the signed cycle space.
struct CycleSpaceBasis {
  IntMatrix rows;       // canonical basis (rref, primitive integer rows, leading entry > 0)
  IntMatrix augmented;  // selected lattice vectors [x; f] before truncation
  LatticeBasis reduced; // full LLL output, for diagnostics
  std::size_t medium_count = 0;

  [[nodiscard]] std::size_t dimension() const noexcept { return rows.rows(); }
  [[nodiscard]] std::size_t edges() const noexcept { return rows.cols(); }
};

/// Squared medium-vector threshold 2m * 2^m, i.e. (sqrt(2m) 2^(m/2))^2.
BigInt medium_threshold_squared(std::size_t m);

/// Vectors of `reduced` with squared norm <= 2m 2^m (ties kept).
std::size_t count_medium_vectors(const LatticeBasis& reduced, std::size_t m);

struct RelationOptions {
  Rational delta = Rational(3, 4);
  /// When set, keep this many shortest LLL vectors instead of thresholding
  /// (the experiments' "optimistic" mode, which knows c = m - n + 1).
  std::optional<std::size_t> keep_shortest;
};

/// LLL on the lattice of l, keep the medium vectors, drop the last coordinate
/// and return a canonical basis of their span. Throws InvalidArgument for an
/// empty l and NoMediumVectors when nothing passes the threshold.
CycleSpaceBasis compute_relations(const LengthVector& l, const RelationOptions& options = {});

/// Same selection step on an already reduced basis.
CycleSpaceBasis relations_from_reduced(LatticeBasis reduced, const RelationOptions& options = {});

/// Enumerates every {-1,0,1} vector with at most k nonzeros (leading nonzero +1)
/// and keeps those with |v . l| <= noise_allowance (default k). Returns a
/// maximal independent subset, greedy in enumeration order (support size, then
/// lexicographic). Throws NoRelationsFound when nothing passes.
CycleSpaceBasis kbasis_relations(const LengthVector& l, std::size_t k,
                                 std::optional<std::size_t> noise_allowance = std::nullopt);

/// True iff the rows span exactly the cycle space of (g, sigma): rank equals
/// m - n + 1 and every row is orthogonal to every column of the incidence matrix.
bool spans_cycle_space(const IntMatrix& rows, const Graph& g, const Orientation& sigma);

}  // namespace linerec
