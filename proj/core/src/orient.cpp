#include "linerec/orient.hpp"

#include <deque>
#include <optional>

#include "linerec/error.hpp"

namespace linerec {

SignedVector cycle_vector_from_space(const IntMatrix& w, std::span<const std::size_t> cycle_edges) {
  const std::size_t m = w.cols();
  const std::size_t c = w.rows();
  std::vector<bool> inside(m, false);
  for (auto k : cycle_edges) inside.at(k) = true;

  // Coefficients a with (a^T W)_j = 0 for every j outside the cycle.
  RatMatrix constraints(0, c);
  for (std::size_t j = 0; j < m; ++j) {
    if (inside[j]) continue;
    std::vector<Rational> row(c);
    for (std::size_t i = 0; i < c; ++i) row[i] = w(i, j);
    constraints.append_row(row);
  }
  if (constraints.rows() == 0) constraints = RatMatrix(1, c);
  const RatMatrix coeffs = right_kernel_basis(constraints);
  if (coeffs.rows() != 1)
    throw Error(Failure::NotACycle, "row space meets the edge set in dimension " + std::to_string(coeffs.rows()));

  std::vector<Rational> y(m, Rational(0));
  for (std::size_t i = 0; i < c; ++i) {
    if (sgn(coeffs(0, i)) == 0) continue;
    for (std::size_t j = 0; j < m; ++j) y[j] += coeffs(0, i) * w(i, j);
  }
  const auto primitive = primitive_integer_vector(y);
  SignedVector out(m, 0);
  for (std::size_t j = 0; j < m; ++j) {
    if (abs(primitive[j]) > 1) throw Error(Failure::NotSigned, "cycle vector has an entry of magnitude > 1");
    out[j] = static_cast<int>(primitive[j].get_si());
    if ((out[j] != 0) != inside[j]) throw Error(Failure::NotACycle, "support differs from the given cycle");
  }
  return out;
}

Orientation compute_orientation(const Graph& g, const IntMatrix& w, const OrientOptions& options) {
  const auto basis = fundamental_cycle_basis(g);
  std::vector<std::optional<Arc>> assigned(g.m());
  bool any_assigned = false;

  std::deque<std::size_t> pending;
  for (std::size_t i = 0; i < basis.cycles.size(); ++i) pending.push_back(i);
  std::size_t stalled = 0;

  while (!pending.empty()) {
    const std::size_t idx = pending.front();
    pending.pop_front();
    const CycleWalk& walk = basis.cycles[idx];
    const std::size_t len = walk.vertices.size();

    std::optional<std::size_t> anchor;
    for (std::size_t t = 0; t < len && !anchor; ++t)
      if (assigned[walk.edges[t]]) anchor = t;

    if (!anchor && any_assigned) {
      const std::size_t outstanding = pending.size() + 1;
      if (stalled < outstanding) {
        pending.push_back(idx);
        ++stalled;
        continue;
      }
      if (!options.restart_blocks) throw Error(Failure::Deadlock, "no remaining cycle shares an oriented edge");
    }
    stalled = 0;

    const SignedVector sv = cycle_vector_from_space(w, walk.edges);
    int sign = 1;
    if (anchor) {
      const std::size_t t = *anchor;
      const std::size_t k = walk.edges[t];
      const bool forward = assigned[k]->tail == walk.vertices[t];
      sign = (forward ? 1 : -1) * sv[k];
    }
    for (std::size_t t = 0; t < len; ++t) {
      const std::size_t k = walk.edges[t];
      const std::size_t a = walk.vertices[t];
      const std::size_t b = walk.vertices[(t + 1) % len];
      const Arc arc = sign * sv[k] > 0 ? Arc{a, b} : Arc{b, a};
      if (assigned[k] && !(*assigned[k] == arc))
        throw Error(Failure::OrientationConflict, "edge " + std::to_string(k) + " would be oriented both ways");
      assigned[k] = arc;
    }
    any_assigned = true;
  }

  Orientation sigma;
  sigma.arcs.reserve(g.m());
  for (std::size_t k = 0; k < g.m(); ++k)
    sigma.arcs.push_back(assigned[k] ? *assigned[k] : Arc{g.edge(k).u, g.edge(k).v});
  return sigma;
}

}  // namespace linerec
