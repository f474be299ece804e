#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "linerec/exactmath.hpp"

namespace linerec {

/// Undirected edge with u < v. Vertices are 0-based in the library; the text
/// formats use 1-based labels.
struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Arc {
  std::size_t tail = 0;
  std::size_t head = 0;
  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Simple undirected graph. Edges are kept sorted lexicographically, and
/// coordinate k of every length vector refers to edges()[k].
class Graph {
 public:
  Graph() = default;
  /// Throws Error(InvalidArgument) on loops, repeated edges or out-of-range endpoints.
  Graph(std::size_t n, std::vector<Edge> edges);

  [[nodiscard]] std::size_t n() const noexcept { return n_; }
  [[nodiscard]] std::size_t m() const noexcept { return edges_.size(); }
  [[nodiscard]] const std::vector<Edge>& edges() const noexcept { return edges_; }
  [[nodiscard]] const Edge& edge(std::size_t k) const { return edges_[k]; }
  [[nodiscard]] std::optional<std::size_t> edge_index(std::size_t a, std::size_t b) const;

  /// (neighbour, edge index) pairs, neighbours ascending.
  [[nodiscard]] const std::vector<std::pair<std::size_t, std::size_t>>& incident(std::size_t v) const {
    return adjacency_[v];
  }
  [[nodiscard]] std::size_t degree(std::size_t v) const { return adjacency_[v].size(); }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adjacency_;
};

/// Per-edge direction; arcs[k] is the directed version of edges()[k].
struct Orientation {
  std::vector<Arc> arcs;

  [[nodiscard]] Orientation flipped() const;
  /// Representative of {sigma, flip(sigma)} whose edge 0 points from the lower to the higher vertex.
  [[nodiscard]] Orientation canonical() const;
  friend bool operator==(const Orientation&, const Orientation&) = default;
};

using Configuration = std::vector<BigInt>;
using LengthVector = std::vector<BigInt>;
using SignedVector = std::vector<int>;

/// Closed walk v0 -> v1 -> ... -> v0; edges[t] joins vertices[t] and vertices[(t+1) % k].
struct CycleWalk {
  std::vector<std::size_t> vertices;
  std::vector<std::size_t> edges;
};

struct SpanningTree {
  std::size_t root = 0;
  std::vector<std::size_t> edges;                     // tree edge indices, in discovery order
  std::vector<std::size_t> order;                     // vertices in BFS order
  std::vector<std::optional<std::size_t>> parent;     // parent vertex
  std::vector<std::optional<std::size_t>> parent_edge;
  std::vector<std::size_t> depth;
};

struct FundamentalCycles {
  SpanningTree tree;
  std::vector<std::size_t> non_tree_edges;  // canonical order
  std::vector<CycleWalk> cycles;            // cycles[i] closes non_tree_edges[i]
};

/// sigma_p: edge {i,j} is oriented (i,j) iff p_i < p_j.
Orientation configuration_orientation(const Graph& g, const Configuration& p);

/// m x n signed incidence matrix: -1 at the tail, +1 at the head.
IntMatrix incidence_matrix(const Graph& g, const Orientation& sigma);

/// |p_j - p_i| per edge, canonical edge order.
LengthVector measure(const Graph& g, const Configuration& p);

/// BFS from `root`, neighbours visited in index order. Throws Disconnected.
SpanningTree bfs_spanning_tree(const Graph& g, std::size_t root = 0);

/// One cycle per non-tree edge {i,j}: the edge plus the tree path between i and j.
FundamentalCycles fundamental_cycle_basis(const Graph& g);

/// Signed cycle vector: +1 where the walk agrees with sigma, -1 where it opposes, 0 off the cycle.
SignedVector signed_cycle_vector(const Graph& g, const Orientation& sigma, const CycleWalk& walk);

/// Rows are the signed vectors of the fundamental cycles; spans the signed cycle space.
IntMatrix cycle_space_matrix(const Graph& g, const Orientation& sigma);

bool is_connected(const Graph& g);
/// True iff n > k and removing any k-1 or fewer vertices leaves a connected graph.
bool is_k_connected(const Graph& g, std::size_t k);

bool are_isomorphic(const Graph& a, const Graph& b);

/// Vertex v of g becomes perm[v].
Graph relabel(const Graph& g, const std::vector<std::size_t>& perm);

enum class GraphFamily { Cycle, NearThreeRegular, Complete };

std::string_view to_string(GraphFamily f);
/// Accepts "cycle", "near3regular", "complete". Throws InvalidArgument.
GraphFamily parse_family(std::string_view name);

/// Deterministic given seed. near3regular: degree 3 everywhere except one vertex
/// of degree 4 or 5 (parity decides), 3-connected. Throws InfeasibleFamily.
Graph generate_graph(GraphFamily family, std::size_t n, std::uint64_t seed);

Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph complete_bipartite_graph(std::size_t a, std::size_t b);
Graph petersen_graph();
/// Circular ladder C_k x K_2.
Graph prism_graph(std::size_t k);
/// Hub plus a k-cycle rim.
Graph wheel_graph(std::size_t k);

/// Each coordinate independent uniform on {1, ..., 2^bits}.
Configuration sample_configuration(std::size_t n, unsigned bits, std::uint64_t seed);

/// Resamples (with derived seeds) until no edge has coincident endpoints.
Configuration sample_generic_configuration(const Graph& g, unsigned bits, std::uint64_t seed);

}  // namespace linerec
