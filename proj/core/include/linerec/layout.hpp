#pragma once

#include <vector>

#include "linerec/exactmath.hpp"
#include "linerec/graph.hpp"

namespace linerec {

using RealConfiguration = std::vector<Rational>;

/// Canonical representative of a configuration up to translation and
/// reflection: shift so the minimum is 0, then take whichever of p and its
/// mirror image is lexicographically smaller.
Configuration normalize_congruence(const Configuration& p);
RealConfiguration normalize_congruence(const RealConfiguration& p);

bool congruent(const Configuration& a, const Configuration& b);

/// Greedy placement along the BFS spanning tree from vertex 0, then every
/// non-tree edge is checked (p_head - p_tail == l_e). Returns the normalised
/// configuration; throws InconsistentLengths on a failed check.
Configuration tree_layout(const Graph& g, const Orientation& sigma, const LengthVector& l);

struct LeastSquaresLayout {
  RealConfiguration positions;  // normalised
  double residual = 0.0;        // sum of squared edge errors at the minimiser
};

/// Minimises sum_e (p_head - p_tail - l_e)^2. The unchecked tree layout is
/// used as the base point; the small correction is solved in double precision
/// from the reduced Laplacian normal equations (gauge: vertex 0 fixed).
LeastSquaresLayout least_squares_layout(const Graph& g, const Orientation& sigma, const LengthVector& l);

/// Exact objective sum_e (p_head - p_tail - l_e)^2.
Rational squared_error(const Graph& g, const Orientation& sigma, const LengthVector& l, const RealConfiguration& p);

/// Componentwise nearest integer.
Configuration round_configuration(const RealConfiguration& p);

}  // namespace linerec
