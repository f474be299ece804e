#include "linerec/realize.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>

#include "linerec/error.hpp"
#include "linerec/relations.hpp"

namespace linerec {

IndependenceOracle::IndependenceOracle(const IntMatrix& cycle_rows)
    : w_(cycle_rows), m_(cycle_rows.cols()), c_(cycle_rows.rows()) {
  if (rank(w_) != c_) throw Error(Failure::InvalidArgument, "cycle space rows are not independent");
}

bool IndependenceOracle::is_independent(std::span<const std::size_t> edge_subset) const {
  std::vector<bool> inside(m_, false);
  for (auto k : edge_subset) inside.at(k) = true;
  std::vector<std::size_t> outside;
  for (std::size_t k = 0; k < m_; ++k)
    if (!inside[k]) outside.push_back(k);
  return rank(select_columns(w_, outside)) == c_;
}

IntMatrix permute_columns(const IntMatrix& w, const std::vector<std::size_t>& edge_of_coordinate) {
  IntMatrix out(w.rows(), w.cols());
  for (std::size_t i = 0; i < w.rows(); ++i)
    for (std::size_t k = 0; k < w.cols(); ++k) out(i, edge_of_coordinate[k]) = w(i, k);
  return out;
}

namespace {

/// Depth-first walk over the coefficient cube {-1,0,1}^d of the kernel basis.
/// A coordinate is checked as soon as the last basis row touching it is fixed.
template <typename Int>
class KernelEnumerator {
 public:
  KernelEnumerator(std::vector<std::vector<Int>> rows, Int scale, std::size_t m)
      : rows_(std::move(rows)), scale_(std::move(scale)), m_(m), sums_(m, Int(0)), finish_(rows_.size()) {
    for (std::size_t j = 0; j < m_; ++j) {
      std::optional<std::size_t> last;
      for (std::size_t i = 0; i < rows_.size(); ++i)
        if (rows_[i][j] != 0) last = i;
      if (last) finish_[*last].push_back(j);
    }
  }

  std::vector<SignedVector> run() {
    if (!rows_.empty()) descend(0);
    return std::move(found_);
  }

 private:
  void descend(std::size_t i) {
    for (int a : {0, 1, -1}) {
      if (a != 0) add(i, a);
      bool ok = true;
      for (auto j : finish_[i]) {
        if (sums_[j] != 0 && sums_[j] != scale_ && sums_[j] != -scale_) {
          ok = false;
          break;
        }
      }
      if (ok) {
        if (i + 1 < rows_.size()) descend(i + 1);
        else emit();
      }
      if (a != 0) add(i, -a);
    }
  }

  void add(std::size_t i, int a) {
    for (std::size_t j = 0; j < m_; ++j) {
      if (rows_[i][j] == 0) continue;
      if (a > 0) sums_[j] += rows_[i][j];
      else sums_[j] -= rows_[i][j];
    }
  }

  void emit() {
    SignedVector v(m_, 0);
    int first = 0;
    for (std::size_t j = 0; j < m_; ++j) {
      if (sums_[j] == 0) continue;
      v[j] = sums_[j] > 0 ? 1 : -1;
      if (first == 0) first = v[j];
    }
    if (first > 0) found_.push_back(std::move(v));
  }

  std::vector<std::vector<Int>> rows_;
  Int scale_;
  std::size_t m_;
  std::vector<Int> sums_;
  std::vector<std::vector<std::size_t>> finish_;
  std::vector<SignedVector> found_;
};

}  // namespace

std::vector<SignedVector> enumerate_star_candidates(const IntMatrix& w, const RealizeOptions& options) {
  const std::size_t m = w.cols();
  const RatMatrix kernel = right_kernel_basis(to_rational(w));
  const std::size_t d = kernel.rows();
  if (d + 1 > options.max_vertices)
    throw Error(Failure::TooLarge, "realisation would enumerate 3^" + std::to_string(d) + " assignments");
  if (d == 0) return {};

  BigInt scale = 1;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < m; ++j) scale = lcm(scale, BigInt(kernel(i, j).get_den()));
  std::vector<std::vector<BigInt>> scaled(d, std::vector<BigInt>(m));
  BigInt largest = scale;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      scaled[i][j] = kernel(i, j).get_num() * (scale / kernel(i, j).get_den());
      if (abs(scaled[i][j]) > largest) largest = abs(scaled[i][j]);
    }

  // Fast path when every partial sum provably fits in 64 bits.
  const BigInt limit = BigInt(std::numeric_limits<std::int64_t>::max() / 4);
  if (largest * static_cast<unsigned long>(d + 1) < limit) {
    std::vector<std::vector<std::int64_t>> small(d, std::vector<std::int64_t>(m));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < m; ++j) small[i][j] = scaled[i][j].get_si();
    return KernelEnumerator<std::int64_t>(std::move(small), scale.get_si(), m).run();
  }
  return KernelEnumerator<BigInt>(std::move(scaled), scale, m).run();
}

namespace {

class CoverSearch {
 public:
  CoverSearch(const std::vector<SignedVector>& candidates, std::size_t m, std::size_t n, const IntMatrix& w)
      : cand_(candidates), m_(m), n_(n), w_(w), cover_(m, 0), first_sign_(m, 0), used_(candidates.size(), false) {
    supports_.resize(cand_.size());
    for (std::size_t c = 0; c < cand_.size(); ++c)
      for (std::size_t j = 0; j < m_; ++j)
        if (cand_[c][j] != 0) supports_[c].push_back(j);

    std::vector<std::size_t> order(cand_.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      if (supports_[a].size() != supports_[b].size()) return supports_[a].size() < supports_[b].size();
      return supports_[a] < supports_[b];
    });
    by_coordinate_.resize(m_);
    for (auto c : order)
      for (auto j : supports_[c]) by_coordinate_[j].push_back(c);
  }

  std::optional<Realization> run() {
    if (n_ == 0) return std::nullopt;
    if (dfs()) return std::move(result_);
    return std::nullopt;
  }

 private:
  /// Signs s in {+1,-1} under which candidate c can be added; empty if none.
  std::vector<int> admissible_signs(std::size_t c) const {
    int forced = 0;
    for (auto j : supports_[c]) {
      if (cover_[j] == 2) return {};
      if (cover_[j] == 1) {
        const int s = -first_sign_[j] * cand_[c][j];
        if (forced != 0 && forced != s) return {};
        forced = s;
      }
    }
    if (forced != 0) return {forced};
    if (chosen_.empty()) return {1};  // global flip symmetry
    return {1, -1};
  }

  void apply(std::size_t c, int s) {
    used_[c] = true;
    chosen_.emplace_back(c, s);
    for (auto j : supports_[c]) {
      if (cover_[j]++ == 0) first_sign_[j] = s * cand_[c][j];
    }
  }

  void undo() {
    const auto [c, s] = chosen_.back();
    chosen_.pop_back();
    used_[c] = false;
    for (auto j : supports_[c])
      if (--cover_[j] == 0) first_sign_[j] = 0;
  }

  bool dfs() {
    if (chosen_.size() == n_) {
      if (std::any_of(cover_.begin(), cover_.end(), [](int x) { return x != 2; })) return false;
      return build();
    }
    // Most constrained open coordinate first.
    std::optional<std::size_t> best;
    std::size_t best_count = std::numeric_limits<std::size_t>::max();
    for (std::size_t j = 0; j < m_; ++j) {
      if (cover_[j] == 2) continue;
      std::size_t count = 0;
      for (auto c : by_coordinate_[j])
        if (!used_[c] && !admissible_signs(c).empty()) ++count;
      if (count == 0) return false;
      if (count < best_count) {
        best_count = count;
        best = j;
      }
    }
    if (!best) return false;  // every edge covered by fewer than n stars
    for (auto c : by_coordinate_[*best]) {
      if (used_[c]) continue;
      for (int s : admissible_signs(c)) {
        apply(c, s);
        if (dfs()) return true;
        undo();
      }
    }
    return false;
  }

  bool build() {
    std::vector<std::size_t> tail(m_), head(m_);
    for (std::size_t v = 0; v < chosen_.size(); ++v) {
      const auto [c, s] = chosen_[v];
      for (auto j : supports_[c]) {
        if (s * cand_[c][j] < 0) tail[j] = v;
        else head[j] = v;
      }
    }
    // Label vertices by first appearance along the coordinates.
    std::vector<std::size_t> label(n_, n_);
    std::size_t next = 0;
    for (std::size_t j = 0; j < m_; ++j)
      for (auto v : {tail[j], head[j]})
        if (label[v] == n_) label[v] = next++;
    if (next != n_) return false;

    std::vector<Edge> edges;
    for (std::size_t j = 0; j < m_; ++j) edges.push_back({label[tail[j]], label[head[j]]});
    Graph g;
    try {
      g = Graph(n_, edges);
    } catch (const Error&) {
      return false;  // parallel edges
    }
    Realization r;
    r.edge_of_coordinate.resize(m_);
    r.orientation.arcs.resize(m_);
    for (std::size_t j = 0; j < m_; ++j) {
      const std::size_t k = *g.edge_index(label[tail[j]], label[head[j]]);
      r.edge_of_coordinate[j] = k;
      r.orientation.arcs[k] = Arc{label[tail[j]], label[head[j]]};
    }
    if (!is_connected(g)) return false;
    if (!spans_cycle_space(permute_columns(w_, r.edge_of_coordinate), g, r.orientation)) return false;
    r.three_connected = is_k_connected(g, 3);
    r.graph = std::move(g);
    result_ = std::move(r);
    return true;
  }

  const std::vector<SignedVector>& cand_;
  std::size_t m_;
  std::size_t n_;
  const IntMatrix& w_;
  std::vector<std::vector<std::size_t>> supports_;
  std::vector<std::vector<std::size_t>> by_coordinate_;
  std::vector<int> cover_;
  std::vector<int> first_sign_;
  std::vector<bool> used_;
  std::vector<std::pair<std::size_t, int>> chosen_;
  Realization result_;
};

}  // namespace

Realization assemble_graph(const std::vector<SignedVector>& candidates, std::size_t m, std::size_t n,
                           const IntMatrix& w) {
  auto r = CoverSearch(candidates, m, n, w).run();
  if (!r) throw Error(Failure::NotGraphic, "no graph on " + std::to_string(n) + " vertices realises the cycle space");
  return std::move(*r);
}

Realization realize_graph(const IntMatrix& w, const RealizeOptions& options) {
  const std::size_t m = w.cols();
  const std::size_t c = w.rows();
  if (c > m) throw Error(Failure::InvalidArgument, "more cycle rows than edges");
  if (rank(w) != c) throw Error(Failure::InvalidArgument, "cycle space rows are not independent");
  const std::size_t n = m - c + 1;
  const auto candidates = enumerate_star_candidates(w, options);
  return assemble_graph(candidates, m, n, w);
}

}  // namespace linerec
