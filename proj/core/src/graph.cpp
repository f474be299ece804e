#include "linerec/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <random>
#include <string>

#include "linerec/error.hpp"
#include "linerec/random.hpp"

namespace linerec {

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  for (auto& e : edges_) {
    if (e.u == e.v) throw Error(Failure::InvalidArgument, "loop at vertex " + std::to_string(e.u + 1));
    if (e.u >= n_ || e.v >= n_) throw Error(Failure::InvalidArgument, "edge endpoint out of range");
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw Error(Failure::InvalidArgument, "repeated edge");

  adjacency_.assign(n_, {});
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    adjacency_[edges_[k].u].emplace_back(edges_[k].v, k);
    adjacency_[edges_[k].v].emplace_back(edges_[k].u, k);
  }
  for (auto& a : adjacency_) std::sort(a.begin(), a.end());
}

std::optional<std::size_t> Graph::edge_index(std::size_t a, std::size_t b) const {
  const Edge key{std::min(a, b), std::max(a, b)};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

Orientation Orientation::flipped() const {
  Orientation out = *this;
  for (auto& a : out.arcs) std::swap(a.tail, a.head);
  return out;
}

Orientation Orientation::canonical() const {
  if (arcs.empty() || arcs.front().tail < arcs.front().head) return *this;
  return flipped();
}

Orientation configuration_orientation(const Graph& g, const Configuration& p) {
  Orientation sigma;
  sigma.arcs.reserve(g.m());
  for (const auto& e : g.edges()) {
    const int c = cmp(p[e.u], p[e.v]);
    if (c == 0)
      throw Error(Failure::CoincidentEndpoints,
                  "vertices " + std::to_string(e.u + 1) + " and " + std::to_string(e.v + 1));
    sigma.arcs.push_back(c < 0 ? Arc{e.u, e.v} : Arc{e.v, e.u});
  }
  return sigma;
}

IntMatrix incidence_matrix(const Graph& g, const Orientation& sigma) {
  IntMatrix m(g.m(), g.n());
  for (std::size_t k = 0; k < g.m(); ++k) {
    m(k, sigma.arcs[k].tail) = -1;
    m(k, sigma.arcs[k].head) = 1;
  }
  return m;
}

LengthVector measure(const Graph& g, const Configuration& p) {
  LengthVector l;
  l.reserve(g.m());
  for (const auto& e : g.edges()) l.push_back(abs(p[e.v] - p[e.u]));
  return l;
}

SpanningTree bfs_spanning_tree(const Graph& g, std::size_t root) {
  SpanningTree t;
  t.root = root;
  t.parent.assign(g.n(), std::nullopt);
  t.parent_edge.assign(g.n(), std::nullopt);
  t.depth.assign(g.n(), 0);
  if (g.n() == 0) return t;

  std::vector<bool> seen(g.n(), false);
  std::deque<std::size_t> queue{root};
  seen[root] = true;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    t.order.push_back(v);
    for (const auto& [w, k] : g.incident(v)) {
      if (seen[w]) continue;
      seen[w] = true;
      t.parent[w] = v;
      t.parent_edge[w] = k;
      t.depth[w] = t.depth[v] + 1;
      t.edges.push_back(k);
      queue.push_back(w);
    }
  }
  if (t.order.size() != g.n()) throw Error(Failure::Disconnected, "graph is not connected");
  return t;
}

FundamentalCycles fundamental_cycle_basis(const Graph& g) {
  FundamentalCycles out;
  out.tree = bfs_spanning_tree(g);
  const auto& t = out.tree;
  std::vector<bool> in_tree(g.m(), false);
  for (auto k : t.edges) in_tree[k] = true;

  for (std::size_t k = 0; k < g.m(); ++k) {
    if (in_tree[k]) continue;
    const auto [i, j] = g.edge(k);
    std::vector<std::size_t> from_j{j};
    std::vector<std::size_t> from_i{i};
    std::size_t a = j;
    std::size_t b = i;
    while (a != b) {
      if (t.depth[a] >= t.depth[b]) {
        a = *t.parent[a];
        from_j.push_back(a);
      } else {
        b = *t.parent[b];
        from_i.push_back(b);
      }
    }
    // from_j ends at the common ancestor; from_i ends there too.
    CycleWalk walk;
    walk.vertices.push_back(i);
    walk.vertices.insert(walk.vertices.end(), from_j.begin(), from_j.end());
    if (from_i.size() == 1) {
      walk.vertices.pop_back();  // i itself is the common ancestor
    } else {
      for (std::size_t s = from_i.size() - 1; s-- > 1;) walk.vertices.push_back(from_i[s]);
    }

    walk.edges.push_back(k);
    for (std::size_t s = 1; s < walk.vertices.size(); ++s) {
      const std::size_t x = walk.vertices[s];
      const std::size_t y = walk.vertices[(s + 1) % walk.vertices.size()];
      walk.edges.push_back(*g.edge_index(x, y));
    }
    out.non_tree_edges.push_back(k);
    out.cycles.push_back(std::move(walk));
  }
  return out;
}

SignedVector signed_cycle_vector(const Graph& g, const Orientation& sigma, const CycleWalk& walk) {
  SignedVector w(g.m(), 0);
  const std::size_t len = walk.vertices.size();
  for (std::size_t s = 0; s < len; ++s) {
    const std::size_t a = walk.vertices[s];
    const std::size_t k = walk.edges[s];
    w[k] = sigma.arcs[k].tail == a ? 1 : -1;
  }
  return w;
}

IntMatrix cycle_space_matrix(const Graph& g, const Orientation& sigma) {
  const auto basis = fundamental_cycle_basis(g);
  IntMatrix w(0, g.m());
  for (const auto& c : basis.cycles) {
    const auto s = signed_cycle_vector(g, sigma, c);
    std::vector<BigInt> row(s.begin(), s.end());
    w.append_row(row);
  }
  return w;
}

namespace {

bool connected_without(const Graph& g, const std::vector<bool>& removed) {
  std::size_t start = g.n();
  std::size_t remaining = 0;
  for (std::size_t v = 0; v < g.n(); ++v) {
    if (removed[v]) continue;
    ++remaining;
    if (start == g.n()) start = v;
  }
  if (remaining <= 1) return true;
  std::vector<bool> seen(removed);
  std::vector<std::size_t> stack{start};
  seen[start] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (const auto& [w, k] : g.incident(v)) {
      if (seen[w]) continue;
      seen[w] = true;
      ++reached;
      stack.push_back(w);
    }
  }
  return reached == remaining;
}

}  // namespace

bool is_connected(const Graph& g) { return connected_without(g, std::vector<bool>(g.n(), false)); }

bool is_k_connected(const Graph& g, std::size_t k) {
  if (k == 0) return true;
  if (g.n() <= k) return false;
  std::vector<bool> removed(g.n(), false);
  // Try every vertex set of size < k.
  std::function<bool(std::size_t, std::size_t)> search = [&](std::size_t start, std::size_t left) {
    if (!connected_without(g, removed)) return false;
    if (left == 0) return true;
    for (std::size_t v = start; v < g.n(); ++v) {
      removed[v] = true;
      const bool ok = search(v + 1, left - 1);
      removed[v] = false;
      if (!ok) return false;
    }
    return true;
  };
  return search(0, k - 1);
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.n() != b.n() || a.m() != b.m()) return false;
  const std::size_t n = a.n();
  auto degrees = [](const Graph& g) {
    std::vector<std::size_t> d;
    for (std::size_t v = 0; v < g.n(); ++v) d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degrees(a) != degrees(b)) return false;

  auto adjacency = [n](const Graph& g) {
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (const auto& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = true;
    return adj;
  };
  const auto adj_a = adjacency(a);
  const auto adj_b = adjacency(b);

  // Map vertices of a in BFS order so each new vertex has mapped neighbours to constrain it.
  std::vector<std::size_t> order;
  std::vector<bool> queued(n, false);
  for (std::size_t s = 0; s < n; ++s) {
    if (queued[s]) continue;
    std::deque<std::size_t> q{s};
    queued[s] = true;
    while (!q.empty()) {
      const auto v = q.front();
      q.pop_front();
      order.push_back(v);
      for (const auto& [w, k] : a.incident(v))
        if (!queued[w]) {
          queued[w] = true;
          q.push_back(w);
        }
    }
  }

  std::vector<std::size_t> image(n, n);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t idx) {
    if (idx == n) return true;
    const std::size_t v = order[idx];
    for (std::size_t cand = 0; cand < n; ++cand) {
      if (used[cand] || b.degree(cand) != a.degree(v)) continue;
      bool ok = true;
      for (std::size_t j = 0; j < idx && ok; ++j) {
        const std::size_t u = order[j];
        ok = adj_a[v][u] == adj_b[cand][image[u]];
      }
      if (!ok) continue;
      image[v] = cand;
      used[cand] = true;
      if (extend(idx + 1)) return true;
      used[cand] = false;
    }
    return false;
  };
  return extend(0);
}

Graph relabel(const Graph& g, const std::vector<std::size_t>& perm) {
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) edges.push_back({perm[e.u], perm[e.v]});
  return Graph(g.n(), std::move(edges));
}

std::string_view to_string(GraphFamily f) {
  switch (f) {
    case GraphFamily::Cycle: return "cycle";
    case GraphFamily::NearThreeRegular: return "near3regular";
    case GraphFamily::Complete: return "complete";
  }
  return "unknown";
}

GraphFamily parse_family(std::string_view name) {
  if (name == "cycle") return GraphFamily::Cycle;
  if (name == "near3regular") return GraphFamily::NearThreeRegular;
  if (name == "complete") return GraphFamily::Complete;
  throw Error(Failure::InvalidArgument, "unknown graph family '" + std::string(name) + "'");
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw Error(Failure::InfeasibleFamily, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph(n, std::move(edges));
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.push_back({i, j});
  return Graph(n, std::move(edges));
}

Graph complete_bipartite_graph(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) edges.push_back({i, a + j});
  return Graph(a + b, std::move(edges));
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});
    edges.push_back({i, i + 5});
    edges.push_back({5 + i, 5 + (i + 2) % 5});
  }
  return Graph(10, std::move(edges));
}

Graph prism_graph(std::size_t k) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < k; ++i) {
    edges.push_back({i, (i + 1) % k});
    edges.push_back({k + i, k + (i + 1) % k});
    edges.push_back({i, k + i});
  }
  return Graph(2 * k, std::move(edges));
}

Graph wheel_graph(std::size_t k) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < k; ++i) {
    edges.push_back({0, i + 1});
    edges.push_back({i + 1, (i + 1) % k + 1});
  }
  return Graph(k + 1, std::move(edges));
}

namespace {

constexpr int kMaxPairingAttempts = 200000;

Graph near_three_regular(std::size_t n, std::uint64_t seed) {
  if (n < 5) throw Error(Failure::InfeasibleFamily, "near3regular needs n >= 5 (n = 4 forces degree <= 3)");
  // Degree sum must be even: 3(n-1) + d.
  const std::size_t hub_degree = (n - 1) % 2 == 0 ? 4 : 5;
  if (hub_degree > n - 1) throw Error(Failure::InfeasibleFamily, "hub degree exceeds n - 1");

  std::vector<std::size_t> stubs;
  for (std::size_t v = 0; v + 1 < n; ++v) stubs.insert(stubs.end(), 3, v);
  stubs.insert(stubs.end(), hub_degree, n - 1);

  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < kMaxPairingAttempts; ++attempt) {
    std::shuffle(stubs.begin(), stubs.end(), rng);
    std::vector<Edge> edges;
    bool simple = true;
    for (std::size_t s = 0; s < stubs.size() && simple; s += 2) {
      Edge e{std::min(stubs[s], stubs[s + 1]), std::max(stubs[s], stubs[s + 1])};
      simple = e.u != e.v && std::find(edges.begin(), edges.end(), e) == edges.end();
      edges.push_back(e);
    }
    if (!simple) continue;
    Graph g(n, std::move(edges));
    if (is_k_connected(g, 3)) return g;
  }
  throw Error(Failure::InfeasibleFamily, "no 3-connected near-3-regular graph found");
}

}  // namespace

Graph generate_graph(GraphFamily family, std::size_t n, std::uint64_t seed) {
  switch (family) {
    case GraphFamily::Cycle: return cycle_graph(n);
    case GraphFamily::Complete:
      if (n < 3) throw Error(Failure::InfeasibleFamily, "complete family needs n >= 3");
      return complete_graph(n);
    case GraphFamily::NearThreeRegular: return near_three_regular(n, seed);
  }
  throw Error(Failure::InvalidArgument, "unknown family");
}

Configuration sample_configuration(std::size_t n, unsigned bits, std::uint64_t seed) {
  if (bits < 1) throw Error(Failure::InvalidArgument, "bits must be >= 1");
  std::mt19937_64 rng(seed);
  const unsigned words = (bits + 63) / 64;
  const unsigned top_bits = bits - 64 * (words - 1);
  Configuration p;
  p.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    BigInt x = 0;
    for (unsigned w = 0; w < words; ++w) {  // most significant word first
      std::uint64_t chunk = rng();
      if (w == 0 && top_bits < 64) chunk &= (std::uint64_t{1} << top_bits) - 1;
      x <<= 64;
      x += BigInt(static_cast<unsigned long>(chunk));
    }
    p.push_back(x + 1);
  }
  return p;
}

Configuration sample_generic_configuration(const Graph& g, unsigned bits, std::uint64_t seed) {
  constexpr std::uint64_t kMaxAttempts = 1000;
  for (std::uint64_t attempt = 0; attempt < kMaxAttempts; ++attempt) {
    auto p = sample_configuration(g.n(), bits, attempt == 0 ? seed : derive_seed(seed, {attempt}));
    const bool generic = std::all_of(g.edges().begin(), g.edges().end(),
                                     [&](const Edge& e) { return p[e.u] != p[e.v]; });
    if (generic) return p;
  }
  throw Error(Failure::CoincidentEndpoints, "could not sample a configuration without coincident endpoints");
}

}  // namespace linerec
