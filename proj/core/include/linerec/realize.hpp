#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "linerec/exactmath.hpp"
#include "linerec/graph.hpp"

namespace linerec {

/// Answers independence queries for the graphic matroid whose signed cycle
/// space is the row space of W: E' is independent iff no nonzero vector of
/// the row space is supported inside E', i.e. W restricted to the columns
/// outside E' still has full rank c.
class IndependenceOracle {
 public:
  /// `cycle_rows` must have full row rank (InvalidArgument otherwise).
  explicit IndependenceOracle(const IntMatrix& cycle_rows);

  [[nodiscard]] bool is_independent(std::span<const std::size_t> edge_subset) const;
  [[nodiscard]] std::size_t edges() const noexcept { return m_; }
  [[nodiscard]] std::size_t dimension() const noexcept { return c_; }

 private:
  IntMatrix w_;
  std::size_t m_;
  std::size_t c_;
};

struct RealizeOptions {
  /// Largest vertex count n = m - c + 1 for which the 3^(n-1) enumeration runs.
  std::size_t max_vertices = 16;
};

/// Every {-1,0,1} vector of the cut space (right kernel of W), with its first
/// nonzero entry positive. Throws TooLarge if n exceeds the option bound.
std::vector<SignedVector> enumerate_star_candidates(const IntMatrix& w, const RealizeOptions& options = {});

/// A graph whose signed cycle space (under `orientation`) equals the row space
/// of W once coordinate k is moved to edge edge_of_coordinate[k].
struct Realization {
  Graph graph;
  Orientation orientation;
  std::vector<std::size_t> edge_of_coordinate;
  bool three_connected = false;
};

/// Exact-cover search for n signed candidates covering every coordinate twice
/// with opposite signs; each chosen candidate becomes a vertex star. The
/// assembled graph is checked against W. Throws NotGraphic when the search is
/// exhausted.
Realization assemble_graph(const std::vector<SignedVector>& candidates, std::size_t m, std::size_t n,
                           const IntMatrix& w);

/// Graph (up to isomorphism when 3-connected) realising the matroid of W.
/// W must have full row rank. Throws NotGraphic or TooLarge.
Realization realize_graph(const IntMatrix& w, const RealizeOptions& options = {});

/// Moves column k of W to column edge_of_coordinate[k].
IntMatrix permute_columns(const IntMatrix& w, const std::vector<std::size_t>& edge_of_coordinate);

}  // namespace linerec
