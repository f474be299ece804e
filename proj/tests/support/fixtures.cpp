#include "fixtures.hpp"

#include <random>
#include <set>

namespace fixtures {

linerec::Graph random_connected_graph(std::size_t n, std::size_t extra, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::set<linerec::Edge> edges;
  for (std::size_t v = 1; v < n; ++v) {
    const std::size_t u = rng() % v;
    edges.insert({u, v});
  }
  const std::size_t max_edges = n * (n - 1) / 2;
  for (std::size_t t = 0; t < extra && edges.size() < max_edges; ++t) {
    for (;;) {
      std::size_t a = rng() % n;
      std::size_t b = rng() % n;
      if (a == b) continue;
      if (a > b) std::swap(a, b);
      if (edges.insert({a, b}).second) break;
    }
  }
  return linerec::Graph(n, {edges.begin(), edges.end()});
}

std::vector<linerec::Graph> three_connected_fixtures() {
  using namespace linerec;
  std::vector<Graph> out{complete_graph(4), complete_graph(5), complete_graph(6),
                         complete_bipartite_graph(3, 3), complete_bipartite_graph(3, 4),
                         complete_bipartite_graph(4, 4), prism_graph(3), prism_graph(4),
                         prism_graph(5), petersen_graph(), wheel_graph(4),
                         wheel_graph(5), wheel_graph(6), wheel_graph(7),
                         wheel_graph(8)};
  for (std::size_t n : {6, 8, 10})
    for (std::uint64_t seed : {1, 2}) out.push_back(generate_graph(GraphFamily::NearThreeRegular, n, seed));
  return out;
}

}  // namespace fixtures
