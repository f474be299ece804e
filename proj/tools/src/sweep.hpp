#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "linerec/graph.hpp"
#include "linerec/pipeline.hpp"

namespace linerec::cli {

struct SweepConfig {
  GraphFamily family = GraphFamily::Cycle;
  std::vector<std::size_t> n_range;
  double target_rate = 0.9;
  std::size_t trials = 50;
  bool optimistic = false;
  NoiseModel::Mode noise = NoiseModel::Mode::Random;
  std::uint64_t seed = 1;
  std::size_t ensembles = 5;  // near-3-regular only
  bool record_time = true;    // false writes wall_ms as 0 so the CSV is reproducible byte for byte
};

struct TrialCell {
  std::size_t trials = 0;
  std::size_t successes = 0;
};

struct SweepRow {
  GraphFamily family = GraphFamily::Cycle;
  std::size_t n = 0;
  std::size_t m = 0;
  std::optional<unsigned> b_required;  // nullopt: window exhausted
  std::size_t trials = 0;
  std::size_t successes = 0;
  double wall_ms = 0;
};

struct SpotCheck {
  std::size_t n = 0;
  unsigned b_low = 0;
  unsigned b_high = 0;
  double rate_low = 0;
  double rate_high = 0;
  bool violated = false;
};

/// One trial: does the relation step recover exactly the signed cycle space
/// of (g, sigma_p)? The sampled configuration and noise come from `seed`.
bool cycle_space_trial(const Graph& g, unsigned bits, bool optimistic, NoiseModel::Mode noise, std::uint64_t seed);

TrialCell run_cell(const Graph& g, unsigned bits, const SweepConfig& config, std::uint64_t cell_seed);

/// Smallest b in [4, 2m^2] whose success rate reaches the target, by binary
/// search under the assumption that success is monotone in b.
SweepRow sweep_one(std::size_t n, const SweepConfig& config);

std::vector<SweepRow> run_sweep(const SweepConfig& config, std::vector<SpotCheck>* checks = nullptr);

void write_csv_header(std::ostream& os);
void write_csv_row(std::ostream& os, const SweepRow& row, bool record_time);

/// gnuplot script for the b_required vs n log-log view of `csv_path`.
void write_gnuplot_script(std::ostream& os, const std::string& csv_path);

}  // namespace linerec::cli
