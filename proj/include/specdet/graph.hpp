#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace specdet {

using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 0..n-1 stored as adjacency bit rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int order() const { return n_; }
  std::size_t size() const;
  int words() const { return words_; }

  bool adjacent(int u, int v) const {
    return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
  }
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  void toggle_edge(int u, int v);

  int degree(int v) const;
  std::vector<int> degrees() const;
  std::vector<int> neighbors(int v) const;
  std::span<const std::uint64_t> row(int v) const {
    return {bits_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
  }

  // Edges (u, v) with u < v in lexicographic order. Constructions that index
  // edges use this order.
  std::vector<Edge> edges() const;

  bool operator==(const Graph& other) const = default;

 private:
  void check_pair(int u, int v) const;

  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Duplicate pairs collapse to one edge; out-of-range pairs and loops are rejected.
Graph build_graph(int n, std::span<const Edge> edges);
inline Graph build_graph(int n, std::initializer_list<Edge> edges) {
  return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices);
Graph delete_vertex(const Graph& g, int v);
Graph relabel(const Graph& g, std::span<const int> perm);  // vertex v becomes perm[v]

Graph complement(const Graph& g);
Graph line_graph(const Graph& g);
Graph disjoint_union(const Graph& a, const Graph& b);
Graph disjoint_union(std::span<const Graph> graphs);
Graph join(const Graph& a, const Graph& b);
Graph disjoint_copies(const Graph& g, int copies);

}  // namespace specdet
