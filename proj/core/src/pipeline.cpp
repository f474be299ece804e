#include "linerec/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "linerec/orient.hpp"
#include "linerec/relations.hpp"

namespace linerec {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::ExactSuccess: return "ExactSuccess";
    case Status::CombinatorialSuccess: return "CombinatorialSuccess";
    case Status::DetectedFailure: return "DetectedFailure";
    case Status::NotGraphic: return "NotGraphic";
    case Status::Inconsistent: return "Inconsistent";
  }
  return "Unknown";
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

void record_failure(ReconstructionResult& r, const Error& e) {
  r.reason = e.kind();
  r.message = e.what();
  switch (e.kind()) {
    case Failure::NotGraphic: r.status = Status::NotGraphic; break;
    case Failure::InconsistentLengths: r.status = Status::Inconsistent; break;
    default: r.status = Status::DetectedFailure; break;
  }
}

/// Orientation and layout on a graph whose coordinates already match `w` and `l`.
void orient_and_layout(ReconstructionResult& r, const IntMatrix& w, const LengthVector& l) {
  auto start = Clock::now();
  OrientOptions orient_options;
  orient_options.restart_blocks = !is_k_connected(r.graph, 2);
  r.orientation = compute_orientation(r.graph, w, orient_options);
  r.timings.orient_ms = elapsed_ms(start);

  start = Clock::now();
  try {
    r.configuration = tree_layout(r.graph, r.orientation, l);
    r.status = Status::ExactSuccess;
  } catch (const Error& e) {
    if (e.kind() != Failure::InconsistentLengths) throw;
    auto ls = least_squares_layout(r.graph, r.orientation, l);
    r.positions = std::move(ls.positions);
    r.residual = ls.residual;
    r.configuration = round_configuration(r.positions);
    // Under {-1,0,1} noise the true configuration already has residual <= m.
    if (r.residual <= static_cast<double>(l.size())) {
      r.status = Status::CombinatorialSuccess;
    } else {
      r.status = Status::Inconsistent;
      r.reason = Failure::InconsistentLengths;
      r.message = "least-squares residual " + std::to_string(r.residual) + " exceeds m";
    }
  }
  r.timings.layout_ms = elapsed_ms(start);
}

LengthVector permute_lengths(const LengthVector& l, const std::vector<std::size_t>& edge_of_coordinate) {
  LengthVector out(l.size());
  for (std::size_t k = 0; k < l.size(); ++k) out[edge_of_coordinate[k]] = l[k];
  return out;
}

std::vector<std::size_t> identity_map(std::size_t m) {
  std::vector<std::size_t> id(m);
  std::iota(id.begin(), id.end(), 0);
  return id;
}

void finish_unlabeled(ReconstructionResult& r, const IntMatrix& w, const LengthVector& l,
                      const PipelineOptions& options) {
  auto start = Clock::now();
  Realization real = realize_graph(w, options.realize);
  r.timings.realize_ms = elapsed_ms(start);
  r.graph = std::move(real.graph);
  r.edge_of_coordinate = std::move(real.edge_of_coordinate);
  r.not_three_connected = !real.three_connected;
  orient_and_layout(r, permute_columns(w, r.edge_of_coordinate), permute_lengths(l, r.edge_of_coordinate));
}

void finish_labeled(ReconstructionResult& r, const Graph& g, const IntMatrix& w, const LengthVector& l) {
  r.graph = g;
  r.edge_of_coordinate = identity_map(g.m());
  r.not_three_connected = !is_k_connected(g, 3);
  orient_and_layout(r, w, l);
}

void check_labeled_input(const Graph& g, const LengthVector& l) {
  if (g.m() != l.size())
    throw Error(Failure::InvalidArgument,
                "graph has " + std::to_string(g.m()) + " edges but " + std::to_string(l.size()) + " lengths given");
  if (!is_connected(g)) throw Error(Failure::Disconnected, "labeled graph is not connected");
}

}  // namespace

ReconstructionResult reconstruct_unlabeled(const LengthVector& l, const PipelineOptions& options) {
  ReconstructionResult r;
  r.undetected_risk = !options.known_vertices.has_value();
  try {
    RelationOptions rel;
    rel.delta = options.delta;
    std::optional<std::size_t> expected;
    if (options.known_vertices) {
      if (*options.known_vertices > l.size() + 1)
        throw Error(Failure::InvalidArgument, "more vertices than a connected graph with m edges allows");
      expected = l.size() + 1 - *options.known_vertices;
      if (options.optimistic) rel.keep_shortest = expected;
    }
    auto start = Clock::now();
    const CycleSpaceBasis basis = compute_relations(l, rel);
    r.timings.relations_ms = elapsed_ms(start);
    r.cycle_rows = basis.rows;
    r.medium_count = basis.medium_count;
    if (expected && !options.optimistic && basis.dimension() != *expected)
      throw Error(Failure::RelationCountMismatch, std::to_string(basis.dimension()) + " medium relations, expected " +
                                                      std::to_string(*expected));
    finish_unlabeled(r, basis.rows, l, options);
  } catch (const Error& e) {
    record_failure(r, e);
  }
  return r;
}

ReconstructionResult reconstruct_labeled(const Graph& g, const LengthVector& l, const PipelineOptions& options) {
  ReconstructionResult r;
  try {
    check_labeled_input(g, l);
    const std::size_t c = g.m() + 1 - g.n();
    RelationOptions rel;
    rel.delta = options.delta;
    if (options.optimistic) rel.keep_shortest = c;
    auto start = Clock::now();
    const CycleSpaceBasis basis = compute_relations(l, rel);
    r.timings.relations_ms = elapsed_ms(start);
    r.cycle_rows = basis.rows;
    r.medium_count = basis.medium_count;
    if (basis.dimension() != c)
      throw Error(Failure::RelationCountMismatch,
                  std::to_string(basis.dimension()) + " medium relations, cycle space has dimension " + std::to_string(c));
    finish_labeled(r, g, basis.rows, l);
  } catch (const Error& e) {
    record_failure(r, e);
  }
  return r;
}

ReconstructionResult reconstruct_labeled_percycle(const Graph& g, const LengthVector& l,
                                                  const PipelineOptions& options) {
  ReconstructionResult r;
  try {
    check_labeled_input(g, l);
    const auto cycles = fundamental_cycle_basis(g);
    RelationOptions rel;
    rel.delta = options.delta;
    if (options.optimistic) rel.keep_shortest = 1;

    auto start = Clock::now();
    IntMatrix w(0, g.m());
    for (std::size_t i = 0; i < cycles.cycles.size(); ++i) {
      const auto& edges = cycles.cycles[i].edges;
      LengthVector sub;
      for (auto k : edges) sub.push_back(l[k]);
      CycleSpaceBasis single;
      try {
        single = compute_relations(sub, rel);
      } catch (const Error& e) {
        throw Error(e.kind(), "cycle " + std::to_string(i) + ": " + e.what());
      }
      r.medium_count += single.medium_count;
      const bool signed_full = single.dimension() == 1 &&
                               std::all_of(single.rows.row(0).begin(), single.rows.row(0).end(),
                                           [](const BigInt& x) { return abs(x) == 1; });
      if (!signed_full)
        throw Error(Failure::RelationCountMismatch,
                    "cycle " + std::to_string(i) + ": sub-problem did not isolate a single signed relation");
      std::vector<BigInt> row(g.m(), BigInt(0));
      for (std::size_t t = 0; t < edges.size(); ++t) row[edges[t]] = single.rows(0, t);
      w.append_row(row);
    }
    r.timings.relations_ms = elapsed_ms(start);
    r.cycle_rows = canonical_row_basis(to_rational(w));
    finish_labeled(r, g, w, l);
  } catch (const Error& e) {
    record_failure(r, e);
  }
  return r;
}

ReconstructionResult reconstruct_from_cycle_space(const IntMatrix& w, const LengthVector& l,
                                                  const std::optional<Graph>& g, const PipelineOptions& options) {
  ReconstructionResult r;
  r.cycle_rows = w;
  r.medium_count = w.rows();
  try {
    if (w.cols() != l.size()) throw Error(Failure::InvalidArgument, "cycle space and lengths disagree on m");
    if (g) {
      check_labeled_input(*g, l);
      if (w.rows() + g->n() != g->m() + 1)
        throw Error(Failure::RelationCountMismatch, "recovered relations do not match the cycle space dimension");
      finish_labeled(r, *g, w, l);
    } else {
      r.undetected_risk = !options.known_vertices.has_value();
      finish_unlabeled(r, w, l, options);
    }
  } catch (const Error& e) {
    record_failure(r, e);
  }
  return r;
}

LengthVector round_real_lengths(std::span<const double> lengths) {
  LengthVector out;
  out.reserve(lengths.size());
  for (double x : lengths) {
    if (!std::isfinite(x) || x < 0) throw Error(Failure::InvalidArgument, "lengths must be finite and non-negative");
    out.emplace_back(std::nearbyint(x));  // default rounding mode: ties to even
  }
  return out;
}

LengthVector apply_noise(const LengthVector& l, const NoiseModel& noise, std::uint64_t seed) {
  LengthVector out = l;
  switch (noise.mode) {
    case NoiseModel::Mode::None: break;
    case NoiseModel::Mode::Random: {
      std::mt19937_64 rng(seed);
      for (auto& x : out) x += static_cast<long>(rng() % 3) - 1;
      break;
    }
    case NoiseModel::Mode::Fixed:
      if (noise.fixed.size() != l.size()) throw Error(Failure::InvalidArgument, "noise vector length differs from m");
      for (std::size_t k = 0; k < l.size(); ++k) {
        if (noise.fixed[k] < -1 || noise.fixed[k] > 1) throw Error(Failure::InvalidArgument, "noise entries must be in {-1,0,1}");
        out[k] += noise.fixed[k];
      }
      break;
  }
  return out;
}

bool verify_result(const ReconstructionResult& result, const LengthVector& l, unsigned noise_bound) {
  if (!result.succeeded()) return false;
  if (result.edge_of_coordinate.size() != l.size() || result.graph.m() != l.size()) return false;
  if (result.configuration.size() != result.graph.n()) return false;
  const LengthVector measured = measure(result.graph, result.configuration);
  for (std::size_t k = 0; k < l.size(); ++k)
    if (abs(measured[result.edge_of_coordinate[k]] - l[k]) > noise_bound) return false;
  return true;
}

std::optional<std::vector<std::size_t>> vertex_correspondence(const Graph& original, const Graph& recovered,
                                                              const std::vector<std::size_t>& edge_of_coordinate) {
  if (original.n() != recovered.n() || original.m() != recovered.m() || edge_of_coordinate.size() != original.m())
    return std::nullopt;
  const std::size_t n = original.n();
  std::vector<std::size_t> image(n, n);
  std::vector<std::set<std::size_t>> options(n);
  for (std::size_t v = 0; v < n; ++v) {
    bool first = true;
    for (const auto& [w, k] : original.incident(v)) {
      const Edge& e = recovered.edge(edge_of_coordinate[k]);
      std::set<std::size_t> ends{e.u, e.v};
      if (first) {
        options[v] = ends;
        first = false;
      } else {
        std::set<std::size_t> keep;
        for (auto x : options[v])
          if (ends.count(x)) keep.insert(x);
        options[v] = std::move(keep);
      }
    }
    if (options[v].size() == 1) image[v] = *options[v].begin();
  }
  // Degree-one vertices: take the end not used by the neighbour.
  for (std::size_t v = 0; v < n; ++v) {
    if (image[v] != n || options[v].size() != 2) continue;
    const std::size_t nb = original.incident(v).front().first;
    if (image[nb] == n) return std::nullopt;
    for (auto x : options[v])
      if (x != image[nb]) image[v] = x;
  }
  std::vector<bool> hit(n, false);
  for (auto x : image) {
    if (x == n || hit[x]) return std::nullopt;
    hit[x] = true;
  }
  for (std::size_t k = 0; k < original.m(); ++k) {
    const Edge& e = original.edge(k);
    const auto mapped = recovered.edge_index(image[e.u], image[e.v]);
    if (!mapped || *mapped != edge_of_coordinate[k]) return std::nullopt;
  }
  return image;
}

std::optional<Configuration> configuration_in_original_labels(const ReconstructionResult& result,
                                                              const Graph& original) {
  if (!result.succeeded() || result.configuration.size() != result.graph.n()) return std::nullopt;
  const auto image = vertex_correspondence(original, result.graph, result.edge_of_coordinate);
  if (!image) return std::nullopt;
  Configuration p(original.n());
  for (std::size_t v = 0; v < original.n(); ++v) p[v] = result.configuration[(*image)[v]];
  return p;
}

}  // namespace linerec
