#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "specdet/graph.hpp"

namespace specdet {

Graph seidel_switch(const Graph& g, const std::vector<int>& u);
// G must be regular. True iff switching keeps G d-regular: U induces a
// k-regular graph with |U| = n - 2(d - k), and every vertex outside U has
// exactly |U|/2 neighbours in U. The empty set counts as 0-regular.
bool seidel_regular_condition(const Graph& g, const std::vector<int>& u);
// Sets U of size <= max_size passing the regularity condition whose switch is
// not isomorphic to G. Exhaustive while the subset count is small, sampled
// with `seed` beyond that.
std::optional<std::vector<int>> find_seidel_switching_set(const Graph& g, int max_size, std::uint64_t seed = 0,
                                                           bool require_independent = false);

// Godsil-McKay switching with respect to a single block B. B must induce a
// regular subgraph and every outside vertex sees 0, |B| or |B|/2 of it.
Graph gm_switch(const Graph& g, const std::vector<int>& block);
bool gm_condition(const Graph& g, const std::vector<int>& block);

// Vertices of g1 keep their labels; g2's vertices other than v2 follow in order.
Graph coalesce(const Graph& g1, int v1, const Graph& g2, int v2);
std::pair<Graph, Graph> schwenk_pair(const Graph& g1, int v1, const Graph& g2, int v2, const Graph& gamma, int u);

// v_i = i, copies u_i = n + i; u_i ~ v_j whenever v_i ~ v_j.
Graph duplication(const Graph& g);

enum class CoronaKind { corona, edge, duplication, duplication_neighborhood, duplication_edge, closed_neighborhood };
// Copies of H follow the base graph, ordered by owner (vertex or edge index).
Graph corona_product(CoronaKind kind, const Graph& g, const Graph& h);

Graph subdivision(const Graph& g);         // edge vertices n + j
Graph bipartite_incidence(const Graph& g);  // subdivision plus the original edges

enum class SbJoinKind { vv, ee, ev, ve };
// Layout: V(G1), edge vertices of G1, V(G2), edge vertices of G2.
Graph sb_join(SbJoinKind kind, const Graph& g1, const Graph& g2);

enum class SplitKind { NS, NNS };
// Layout: G on 0..n-1, primed copies n..2n-1, H after them. Primed vertices
// are not joined to H.
Graph splitting_join(SplitKind kind, const Graph& g, const Graph& h);

}  // namespace specdet
