#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace oracle {

namespace {

using linerec::Rational;

struct Enumerator {
  std::size_t d = 0;
  std::vector<std::vector<Rational>> mu;
  std::vector<Rational> bstar;  // squared GS norms
  const IntRows* rows = nullptr;
  BigInt best;
  std::vector<long> coeff;

  void visit(std::size_t level, const Rational& partial) {
    // centre of the admissible interval for coeff[level]
    Rational centre = 0;
    for (std::size_t j = level + 1; j < d; ++j) centre -= mu[j][level] * coeff[j];
    const Rational room = (Rational(best) - partial) / bstar[level];
    if (room < 0) return;
    const double half = std::sqrt(room.get_d()) + 1.0;  // widened; candidates are re-checked exactly
    const long lo = static_cast<long>(std::floor(centre.get_d() - half));
    const long hi = static_cast<long>(std::ceil(centre.get_d() + half));
    for (long x = lo; x <= hi; ++x) {
      coeff[level] = x;
      const Rational diff = Rational(x) - centre;
      const Rational next = partial + diff * diff * bstar[level];
      if (next > Rational(best)) continue;
      if (level == 0) {
        if (std::all_of(coeff.begin(), coeff.end(), [](long c) { return c == 0; })) continue;
        BigInt norm = 0;
        const std::size_t width = (*rows)[0].size();
        for (std::size_t k = 0; k < width; ++k) {
          BigInt s = 0;
          for (std::size_t i = 0; i < d; ++i) s += BigInt(coeff[i]) * (*rows)[i][k];
          norm += s * s;
        }
        if (norm < best) best = norm;
      } else {
        visit(level - 1, next);
      }
    }
    coeff[level] = 0;
  }
};

}  // namespace

BigInt shortest_vector_norm2(const IntRows& rows) {
  Enumerator e;
  e.d = rows.size();
  e.rows = &rows;
  const std::size_t width = rows.at(0).size();
  std::vector<std::vector<Rational>> star(e.d, std::vector<Rational>(width));
  e.mu.assign(e.d, std::vector<Rational>(e.d, Rational(0)));
  e.bstar.assign(e.d, Rational(0));
  for (std::size_t i = 0; i < e.d; ++i) {
    for (std::size_t k = 0; k < width; ++k) star[i][k] = rows[i][k];
    for (std::size_t j = 0; j < i; ++j) {
      Rational dot = 0;
      for (std::size_t k = 0; k < width; ++k) dot += Rational(rows[i][k]) * star[j][k];
      e.mu[i][j] = dot / e.bstar[j];
      for (std::size_t k = 0; k < width; ++k) star[i][k] -= e.mu[i][j] * star[j][k];
    }
    for (std::size_t k = 0; k < width; ++k) e.bstar[i] += star[i][k] * star[i][k];
  }
  e.best = 0;
  for (std::size_t i = 0; i < e.d; ++i) {
    BigInt n = 0;
    for (const auto& x : rows[i]) n += x * x;
    if (i == 0 || n < e.best) e.best = n;
  }
  e.coeff.assign(e.d, 0);
  e.visit(e.d - 1, Rational(0));
  return e.best;
}

bool lll_conditions(const IntRows& rows, const Rational& delta) {
  const std::size_t d = rows.size();
  if (d == 0) return true;
  const std::size_t width = rows[0].size();
  std::vector<std::vector<Rational>> star(d, std::vector<Rational>(width));
  std::vector<std::vector<Rational>> mu(d, std::vector<Rational>(d, Rational(0)));
  std::vector<Rational> b(d, Rational(0));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < width; ++k) star[i][k] = rows[i][k];
    for (std::size_t j = 0; j < i; ++j) {
      Rational dot = 0;
      for (std::size_t k = 0; k < width; ++k) dot += Rational(rows[i][k]) * star[j][k];
      mu[i][j] = dot / b[j];
      if (abs(mu[i][j]) > Rational(1, 2)) return false;
      for (std::size_t k = 0; k < width; ++k) star[i][k] -= mu[i][j] * star[j][k];
    }
    for (std::size_t k = 0; k < width; ++k) b[i] += star[i][k] * star[i][k];
    if (b[i] == 0) return false;
    if (i > 0 && b[i] < (delta - mu[i][i - 1] * mu[i][i - 1]) * b[i - 1]) return false;
  }
  return true;
}

std::vector<std::vector<int>> signed_relations(const std::vector<std::int64_t>& l) {
  const std::size_t m = l.size();
  std::vector<std::vector<int>> out;
  std::vector<int> w(m, -1);
  std::size_t total = 1;
  for (std::size_t i = 0; i < m; ++i) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t x = code;
    std::int64_t s = 0;
    for (std::size_t i = 0; i < m; ++i) {
      w[i] = static_cast<int>(x % 3) - 1;
      x /= 3;
      s += w[i] * l[i];
    }
    if (s != 0) continue;
    auto first = std::find_if(w.begin(), w.end(), [](int v) { return v != 0; });
    if (first == w.end() || *first != 1) continue;
    out.push_back(w);
  }
  return out;
}

bool is_acyclic(int n, const EdgeList& edges, const std::vector<int>& subset) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
  for (int k : subset) {
    const int a = find(edges[k].first);
    const int b = find(edges[k].second);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

bool isomorphic_bruteforce(int n, const EdgeList& a, const EdgeList& b) {
  if (a.size() != b.size()) return false;
  auto key = [](int u, int v) { return std::pair{std::min(u, v), std::max(u, v)}; };
  std::vector<std::pair<int, int>> target;
  for (auto [u, v] : b) target.push_back(key(u, v));
  std::sort(target.begin(), target.end());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<std::pair<int, int>> mapped;
    for (auto [u, v] : a) mapped.push_back(key(perm[u], perm[v]));
    std::sort(mapped.begin(), mapped.end());
    if (mapped == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

int rank_small(std::vector<std::vector<std::int64_t>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  int rank = 0;
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    auto pivot = std::find_if(rows.begin() + rank, rows.end(), [&](const auto& r) { return r[c] != 0; });
    if (pivot == rows.end()) continue;
    std::iter_swap(rows.begin() + rank, pivot);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      const std::int64_t a = rows[rank][c];
      const std::int64_t b = rows[r][c];
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] = rows[r][k] * a - rows[rank][k] * b;
      std::int64_t g = 0;
      for (auto x : rows[r]) g = std::gcd(g, x);
      if (g > 1)
        for (auto& x : rows[r]) x /= g;
    }
    ++rank;
  }
  return rank;
}

std::vector<EdgeList> connected_graphs(int n, int m) {
  EdgeList all;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
  std::vector<EdgeList> out;
  if (m > static_cast<int>(all.size())) return out;
  std::vector<bool> pick(all.size(), false);
  std::fill(pick.begin(), pick.begin() + m, true);
  do {
    EdgeList g;
    for (std::size_t i = 0; i < all.size(); ++i)
      if (pick[i]) g.push_back(all[i]);
    // connected iff a spanning forest of g has n - 1 edges
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
    int joined = 0;
    for (auto [u, v] : g) {
      const int a = find(u);
      const int b = find(v);
      if (a != b) {
        parent[a] = b;
        ++joined;
      }
    }
    if (joined == n - 1) out.push_back(g);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

bool is_graphic_bruteforce(const std::vector<std::vector<std::int64_t>>& w) {
  const int c = static_cast<int>(w.size());
  const int m = static_cast<int>(w.at(0).size());
  if (rank_small(w) != c) return false;
  const int n = m - c + 1;
  if (n < 1) return false;
  for (const auto& g : connected_graphs(n, m)) {
    std::vector<int> perm(m);  // coordinate k -> edge perm[k]
    std::iota(perm.begin(), perm.end(), 0);
    do {
      for (std::uint32_t signs = 0; signs < (1u << m); ++signs) {
        // The row space is the signed cycle space iff every row is orthogonal
        // to every vertex cut (dimensions already agree).
        bool ok = true;
        for (int i = 0; i < c && ok; ++i) {
          std::vector<std::int64_t> at_vertex(n, 0);
          for (int k = 0; k < m; ++k) {
            const auto [u, v] = g[perm[k]];
            const std::int64_t s = (signs >> k & 1u) ? -w[i][k] : w[i][k];
            at_vertex[u] -= s;
            at_vertex[v] += s;
          }
          ok = std::all_of(at_vertex.begin(), at_vertex.end(), [](std::int64_t x) { return x == 0; });
        }
        if (ok) return true;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return false;
}

}  // namespace oracle
