#pragma once

#include <span>

#include "linerec/exactmath.hpp"
#include "linerec/graph.hpp"

namespace linerec {

/// The unique (up to sign) vector of row space(W) supported on the simple
/// cycle `cycle_edges`, as a {-1,0,1} vector with leading entry +1.
/// Throws NotACycle when the intersection is not one-dimensional or its
/// support differs from the given edges, NotSigned when entries leave {-1,0,1}.
SignedVector cycle_vector_from_space(const IntMatrix& w, std::span<const std::size_t> cycle_edges);

struct OrientOptions {
  /// For graphs that are not 2-connected: when no pending cycle touches an
  /// oriented edge, start a new block with an arbitrary sign instead of
  /// failing with Deadlock. Blocks then flip independently.
  bool restart_blocks = false;
};

/// Orientation sigma whose signed cycle space is row space(W), determined up
/// to a global flip by propagating signs along fundamental cycles. Edges on
/// no cycle (bridges) are oriented from lower to higher vertex.
/// Throws OrientationConflict or Deadlock.
Orientation compute_orientation(const Graph& g, const IntMatrix& w, const OrientOptions& options = {});

}  // namespace linerec
