#pragma once

// Slow reference implementations used only by the tests. None of them call
// into the library code they check.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "linerec/exactmath.hpp"

namespace oracle {

using linerec::BigInt;
using IntRows = std::vector<std::vector<BigInt>>;
using EdgeList = std::vector<std::pair<int, int>>;

/// Squared length of a shortest nonzero vector of the lattice spanned by
/// `rows` (linearly independent), by Fincke-Pohst enumeration.
BigInt shortest_vector_norm2(const IntRows& rows);

/// Size reduction (|mu_ij| <= 1/2) and the Lovasz condition for delta,
/// from a Gram-Schmidt computed here.
bool lll_conditions(const IntRows& rows, const linerec::Rational& delta);

/// All nonzero w in {-1,0,1}^m with sum w_i l_i == 0, first nonzero entry +1.
std::vector<std::vector<int>> signed_relations(const std::vector<std::int64_t>& l);

/// Union-find acyclicity of the chosen edges.
bool is_acyclic(int n, const EdgeList& edges, const std::vector<int>& subset);

/// Isomorphism by trying every vertex permutation (small n only).
bool isomorphic_bruteforce(int n, const EdgeList& a, const EdgeList& b);

/// Rank of an integer matrix by fraction-free elimination in plain int64
/// (inputs must be small).
int rank_small(std::vector<std::vector<std::int64_t>> rows);

/// Does some connected simple graph with n = m - c + 1 vertices, some
/// bijection of coordinates to its edges and some orientation have signed
/// cycle space equal to the row space of w? Exhaustive; m <= 7.
bool is_graphic_bruteforce(const std::vector<std::vector<std::int64_t>>& w);

/// All connected simple graphs on n labelled vertices with m edges.
std::vector<EdgeList> connected_graphs(int n, int m);

}  // namespace oracle
