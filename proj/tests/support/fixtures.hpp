#pragma once

#include <cstdint>
#include <vector>

#include "linerec/graph.hpp"
#include "oracles.hpp"

namespace fixtures {

inline oracle::EdgeList edge_list(const linerec::Graph& g) {
  oracle::EdgeList out;
  for (const auto& e : g.edges()) out.emplace_back(static_cast<int>(e.u), static_cast<int>(e.v));
  return out;
}

inline std::vector<std::int64_t> small(const std::vector<linerec::BigInt>& v) {
  std::vector<std::int64_t> out;
  for (const auto& x : v) out.push_back(x.get_si());
  return out;
}

inline linerec::IntMatrix int_matrix(const std::vector<std::vector<std::int64_t>>& rows) {
  linerec::IntMatrix out(0, rows.empty() ? 0 : rows[0].size());
  for (const auto& r : rows) {
    std::vector<linerec::BigInt> row;
    for (auto x : r) row.emplace_back(static_cast<long>(x));
    out.append_row(row);
  }
  return out;
}

inline std::vector<std::vector<std::int64_t>> small_rows(const linerec::IntMatrix& m) {
  std::vector<std::vector<std::int64_t>> out;
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(small(m.row_vector(i)));
  return out;
}

/// sigma_p computed directly: every edge points to the larger coordinate.
inline linerec::Orientation ascending(const linerec::Graph& g, const linerec::Configuration& p) {
  linerec::Orientation s;
  for (const auto& e : g.edges()) s.arcs.push_back(p[e.u] < p[e.v] ? linerec::Arc{e.u, e.v} : linerec::Arc{e.v, e.u});
  return s;
}

/// Random connected simple graph: a random tree plus extra random edges.
linerec::Graph random_connected_graph(std::size_t n, std::size_t extra, std::uint64_t seed);

/// Three-connected graphs with n <= 10 and m <= 20 used for round trips.
std::vector<linerec::Graph> three_connected_fixtures();

}  // namespace fixtures
