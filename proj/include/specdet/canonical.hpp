#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "specdet/graph.hpp"

namespace specdet {

// Adjacency rows of the canonically relabelled graph. Equal forms means
// isomorphic graphs.
struct CanonicalForm {
  int n = 0;
  std::vector<std::uint64_t> rows;

  auto operator<=>(const CanonicalForm&) const = default;
  bool operator==(const CanonicalForm&) const = default;

  std::string hex() const;  // upper triangle, column by column, packed big-endian
  Graph graph() const;
  std::size_t hash() const;
};

struct CanonicalLabeling {
  std::vector<int> order;  // order[i] is the vertex placed at canonical position i
  std::vector<int> orbit;  // smallest vertex in the automorphism orbit of each vertex
  std::vector<std::vector<int>> generators;  // automorphisms found during the search
  CanonicalForm form;
};

CanonicalLabeling canonical_labeling(const Graph& g);
CanonicalForm canonical_form(const Graph& g);
Graph canonical_graph(const Graph& g);
bool are_isomorphic(const Graph& a, const Graph& b);

// Wraps the rows of a graph that is already in canonical form (e.g. straight
// out of the enumerator) without searching again.
CanonicalForm form_of_canonical(const Graph& g);

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& f) const { return f.hash(); }
};

}  // namespace specdet
