#include "specdet/graph.hpp"

#include <bit>
#include <string>

#include "specdet/error.hpp"

namespace specdet {

Graph::Graph(int n) : n_(n), words_((n + 63) / 64) {
  require(n >= 0, "graph order must be non-negative");
  bits_.assign(static_cast<std::size_t>(n) * words_, 0);
}

void Graph::check_pair(int u, int v) const {
  require(u >= 0 && u < n_ && v >= 0 && v < n_,
          "vertex out of range: (" + std::to_string(u) + ", " + std::to_string(v) + ")");
  require(u != v, "self-loop at vertex " + std::to_string(u));
}

void Graph::add_edge(int u, int v) {
  check_pair(u, v);
  bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

void Graph::remove_edge(int u, int v) {
  check_pair(u, v);
  bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
  bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] &= ~(std::uint64_t{1} << (u & 63));
}

void Graph::toggle_edge(int u, int v) {
  check_pair(u, v);
  bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] ^= std::uint64_t{1} << (v & 63);
  bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] ^= std::uint64_t{1} << (u & 63);
}

int Graph::degree(int v) const {
  int d = 0;
  for (auto w : row(v)) d += std::popcount(w);
  return d;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(n_);
  for (int v = 0; v < n_; ++v) d[v] = degree(v);
  return d;
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  for (int w = 0; w < words_; ++w) {
    auto bits = row(v)[w];
    while (bits) {
      out.push_back(w * 64 + std::countr_zero(bits));
      bits &= bits - 1;
    }
  }
  return out;
}

std::size_t Graph::size() const {
  std::size_t twice = 0;
  for (auto w : bits_) twice += std::popcount(w);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u)
    for (int v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph build_graph(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    require(u >= 0 && u < n && v >= 0 && v < n,
            "vertex out of range: (" + std::to_string(u) + ", " + std::to_string(v) + ")");
    require(u != v, "self-loop at vertex " + std::to_string(u));
    g.add_edge(u, v);
  }
  return g;
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  const int k = static_cast<int>(vertices.size());
  std::vector<char> seen(g.order(), 0);
  for (int v : vertices) {
    require(v >= 0 && v < g.order(), "vertex out of range in induced subgraph");
    require(!seen[v], "repeated vertex in induced subgraph");
    seen[v] = 1;
  }
  Graph h(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (g.adjacent(vertices[i], vertices[j])) h.add_edge(i, j);
  return h;
}

Graph delete_vertex(const Graph& g, int v) {
  require(v >= 0 && v < g.order(), "vertex out of range");
  std::vector<int> keep;
  for (int u = 0; u < g.order(); ++u)
    if (u != v) keep.push_back(u);
  return induced_subgraph(g, keep);
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  const int n = g.order();
  require(static_cast<int>(perm.size()) == n, "permutation size mismatch");
  std::vector<char> hit(n, 0);
  for (int p : perm) {
    require(p >= 0 && p < n && !hit[p], "not a permutation");
    hit[p] = 1;
  }
  Graph h(n);
  for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
  return h;
}

Graph complement(const Graph& g) {
  const int n = g.order();
  Graph h(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) h.add_edge(u, v);
  return h;
}

Graph line_graph(const Graph& g) {
  auto es = g.edges();
  const int m = static_cast<int>(es.size());
  Graph h(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      auto [a, b] = es[i];
      auto [c, d] = es[j];
      if (a == c || a == d || b == c || b == d) h.add_edge(i, j);
    }
  return h;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const int na = a.order();
  Graph h(na + b.order());
  for (auto [u, v] : a.edges()) h.add_edge(u, v);
  for (auto [u, v] : b.edges()) h.add_edge(na + u, na + v);
  return h;
}

Graph disjoint_union(std::span<const Graph> graphs) {
  Graph h(0);
  for (const auto& g : graphs) h = disjoint_union(h, g);
  return h;
}

Graph join(const Graph& a, const Graph& b) {
  Graph h = disjoint_union(a, b);
  for (int u = 0; u < a.order(); ++u)
    for (int v = 0; v < b.order(); ++v) h.add_edge(u, a.order() + v);
  return h;
}

Graph disjoint_copies(const Graph& g, int copies) {
  require(copies >= 0, "copy count must be non-negative");
  Graph h(0);
  for (int i = 0; i < copies; ++i) h = disjoint_union(h, g);
  return h;
}

}  // namespace specdet
