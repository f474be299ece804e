#include "linerec/layout.hpp"

#include <Eigen/Dense>
#include <algorithm>

#include "linerec/error.hpp"

namespace linerec {

namespace {

template <typename T>
std::vector<T> normalize(const std::vector<T>& p) {
  if (p.empty()) return p;
  const T lo = *std::min_element(p.begin(), p.end());
  const T hi = *std::max_element(p.begin(), p.end());
  std::vector<T> shifted;
  std::vector<T> mirrored;
  shifted.reserve(p.size());
  mirrored.reserve(p.size());
  for (const auto& x : p) {
    shifted.push_back(T(x - lo));
    mirrored.push_back(T(hi - x));
  }
  return std::min(shifted, mirrored);
}

/// Tree placement without the non-tree check; vertex 0 at 0.
Configuration place_along_tree(const Graph& g, const Orientation& sigma, const LengthVector& l,
                               const SpanningTree& tree) {
  Configuration p(g.n(), BigInt(0));
  for (auto v : tree.order) {
    if (!tree.parent[v]) continue;
    const std::size_t u = *tree.parent[v];
    const std::size_t k = *tree.parent_edge[v];
    if (sigma.arcs[k].tail == u) p[v] = p[u] + l[k];
    else p[v] = p[u] - l[k];
  }
  return p;
}

}  // namespace

Configuration normalize_congruence(const Configuration& p) { return normalize(p); }

RealConfiguration normalize_congruence(const RealConfiguration& p) { return normalize(p); }

bool congruent(const Configuration& a, const Configuration& b) {
  return a.size() == b.size() && normalize_congruence(a) == normalize_congruence(b);
}

Configuration tree_layout(const Graph& g, const Orientation& sigma, const LengthVector& l) {
  const SpanningTree tree = bfs_spanning_tree(g);
  const Configuration p = place_along_tree(g, sigma, l, tree);
  for (std::size_t k = 0; k < g.m(); ++k) {
    const Arc& a = sigma.arcs[k];
    if (p[a.head] - p[a.tail] != l[k])
      throw Error(Failure::InconsistentLengths, "edge " + std::to_string(k) + " disagrees with the tree layout");
  }
  return normalize_congruence(p);
}

LeastSquaresLayout least_squares_layout(const Graph& g, const Orientation& sigma, const LengthVector& l) {
  const std::size_t n = g.n();
  const SpanningTree tree = bfs_spanning_tree(g);
  const Configuration base = place_along_tree(g, sigma, l, tree);

  // Residual of the base point per edge; zero on tree edges.
  std::vector<double> r(g.m());
  for (std::size_t k = 0; k < g.m(); ++k) {
    const Arc& a = sigma.arcs[k];
    const BigInt diff = l[k] - (base[a.head] - base[a.tail]);
    r[k] = diff.get_d();
  }

  Eigen::VectorXd delta = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
  if (n > 1) {
    const auto dim = static_cast<Eigen::Index>(n - 1);
    Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(dim, dim);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(dim);
    for (std::size_t k = 0; k < g.m(); ++k) {
      const auto t = static_cast<Eigen::Index>(sigma.arcs[k].tail) - 1;
      const auto h = static_cast<Eigen::Index>(sigma.arcs[k].head) - 1;
      if (t >= 0) {
        lap(t, t) += 1;
        rhs(t) -= r[k];
      }
      if (h >= 0) {
        lap(h, h) += 1;
        rhs(h) += r[k];
      }
      if (t >= 0 && h >= 0) {
        lap(t, h) -= 1;
        lap(h, t) -= 1;
      }
    }
    delta.tail(dim) = lap.ldlt().solve(rhs);
  }

  LeastSquaresLayout out;
  for (std::size_t k = 0; k < g.m(); ++k) {
    const Arc& a = sigma.arcs[k];
    const double e = delta(static_cast<Eigen::Index>(a.head)) - delta(static_cast<Eigen::Index>(a.tail)) - r[k];
    out.residual += e * e;
  }
  RealConfiguration p(n);
  for (std::size_t v = 0; v < n; ++v) p[v] = Rational(base[v]) + Rational(delta(static_cast<Eigen::Index>(v)));
  out.positions = normalize_congruence(p);
  return out;
}

Rational squared_error(const Graph& g, const Orientation& sigma, const LengthVector& l, const RealConfiguration& p) {
  Rational total = 0;
  for (std::size_t k = 0; k < g.m(); ++k) {
    const Arc& a = sigma.arcs[k];
    const Rational e = p[a.head] - p[a.tail] - Rational(l[k]);
    total += e * e;
  }
  return total;
}

Configuration round_configuration(const RealConfiguration& p) {
  Configuration out;
  out.reserve(p.size());
  for (const auto& x : p) out.push_back(round_nearest(x));
  return out;
}

}  // namespace linerec
