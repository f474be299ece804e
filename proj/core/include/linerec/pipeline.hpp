#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "linerec/error.hpp"
#include "linerec/exactmath.hpp"
#include "linerec/graph.hpp"
#include "linerec/layout.hpp"
#include "linerec/realize.hpp"

namespace linerec {

enum class Status { ExactSuccess, CombinatorialSuccess, DetectedFailure, NotGraphic, Inconsistent };

std::string_view to_string(Status s);

struct StageTimings {
  double relations_ms = 0;
  double realize_ms = 0;
  double orient_ms = 0;
  double layout_ms = 0;
};

struct ReconstructionResult {
  Status status = Status::DetectedFailure;
  std::optional<Failure> reason;
  std::string message;

  Graph graph;
  Orientation orientation;
  Configuration configuration;  // exact, or the rounded least-squares layout
  RealConfiguration positions;  // least-squares minimiser when used
  double residual = 0.0;
  /// Input coordinate k is edge edge_of_coordinate[k] of `graph`.
  std::vector<std::size_t> edge_of_coordinate;

  IntMatrix cycle_rows;  // recovered cycle space, input coordinates
  std::size_t medium_count = 0;
  bool not_three_connected = false;
  /// Unlabeled runs without a vertex count cannot validate the relation count.
  bool undetected_risk = false;
  StageTimings timings;

  [[nodiscard]] bool succeeded() const noexcept {
    return status == Status::ExactSuccess || status == Status::CombinatorialSuccess;
  }
};

struct PipelineOptions {
  Rational delta = Rational(3, 4);
  /// Known vertex count: enables the relation-count check in unlabeled mode
  /// and, with `optimistic`, keeps the c shortest LLL vectors instead of
  /// thresholding.
  std::optional<std::size_t> known_vertices;
  bool optimistic = false;
  RealizeOptions realize;
};

/// Lengths only: relations, realisation, orientation, layout.
ReconstructionResult reconstruct_unlabeled(const LengthVector& l, const PipelineOptions& options = {});

/// Graph known; skips realisation. 3-connectivity not needed.
ReconstructionResult reconstruct_labeled(const Graph& g, const LengthVector& l, const PipelineOptions& options = {});

/// Graph known; one small LLL problem per fundamental cycle fixes that cycle's signs.
ReconstructionResult reconstruct_labeled_percycle(const Graph& g, const LengthVector& l,
                                                  const PipelineOptions& options = {});

/// Realisation (when `g` is empty), orientation and layout from a recovered
/// cycle space, e.g. one produced by kbasis_relations.
ReconstructionResult reconstruct_from_cycle_space(const IntMatrix& w, const LengthVector& l,
                                                  const std::optional<Graph>& g, const PipelineOptions& options = {});

/// Nearest integer, ties to even. Entries must be finite and >= 0.
LengthVector round_real_lengths(std::span<const double> lengths);

struct NoiseModel {
  enum class Mode { None, Random, Fixed };
  Mode mode = Mode::None;
  SignedVector fixed;  // used when mode == Fixed; entries in {-1,0,1}
};

/// l + eps with eps uniform on {-1,0,1}^m (Random) or given (Fixed).
LengthVector apply_noise(const LengthVector& l, const NoiseModel& noise, std::uint64_t seed);

/// Measured lengths of (graph, configuration), taken back to input
/// coordinates, are within noise_bound of l everywhere.
bool verify_result(const ReconstructionResult& result, const LengthVector& l, unsigned noise_bound);

/// Vertex map original -> recovered under which original edge k goes to
/// recovered edge edge_of_coordinate[k]; nullopt if no such map exists.
std::optional<std::vector<std::size_t>> vertex_correspondence(const Graph& original, const Graph& recovered,
                                                              const std::vector<std::size_t>& edge_of_coordinate);

/// The recovered configuration pulled back to `original`'s vertex labels via
/// vertex_correspondence; nullopt if the result does not succeed or no
/// correspondence exists.
std::optional<Configuration> configuration_in_original_labels(const ReconstructionResult& result,
                                                              const Graph& original);

}  // namespace linerec
