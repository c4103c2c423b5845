#include "specdet/families.hpp"

#include <numeric>

#include "specdet/error.hpp"

namespace specdet {
namespace {

Graph complete(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph path(int n) {
  require(n >= 1, "path needs n >= 1");
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle(int n) {
  require(n >= 3, "cycle needs n >= 3");
  Graph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph multipartite(const std::vector<int>& parts) {
  require(!parts.empty(), "multipartite graph needs at least one part");
  for (int p : parts) require(p >= 1, "part sizes must be positive");
  const int n = std::accumulate(parts.begin(), parts.end(), 0);
  std::vector<int> part_of;
  for (std::size_t i = 0; i < parts.size(); ++i) part_of.insert(part_of.end(), parts[i], int(i));
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (part_of[u] != part_of[v]) g.add_edge(u, v);
  return g;
}

// Identify a vertex of a triangle with v.
void hang_triangle(Graph& g, int v, int a, int b) {
  g.add_edge(v, a);
  g.add_edge(v, b);
  g.add_edge(a, b);
}

struct Generator {
  Graph operator()(const family::Complete& f) const { return complete(f.n); }
  Graph operator()(const family::Empty& f) const {
    require(f.n >= 0, "empty graph needs n >= 0");
    return Graph(f.n);
  }
  Graph operator()(const family::Path& f) const { return path(f.n); }
  Graph operator()(const family::Cycle& f) const { return cycle(f.n); }
  Graph operator()(const family::Star& f) const {
    require(f.n >= 1, "star needs n >= 1");
    Graph g(f.n);
    for (int v = 1; v < f.n; ++v) g.add_edge(0, v);
    return g;
  }
  Graph operator()(const family::CompleteBipartite& f) const {
    require(f.p >= 1 && f.q >= 1, "complete bipartite graph needs p, q >= 1");
    return multipartite({f.p, f.q});
  }
  Graph operator()(const family::CompleteMultipartite& f) const { return multipartite(f.parts); }
  Graph operator()(const family::Turan& f) const { return multipartite(turan_parts(f.n, f.k)); }
  Graph operator()(const family::Pyramid& f) const {
    require(f.k >= 1 && f.k < f.n, "pyramid needs 1 <= k < n");
    return join(complete(f.k), Graph(f.n - f.k));
  }
  Graph operator()(const family::Friendship& f) const {
    require(f.p >= 1, "friendship graph needs p >= 1");
    return (*this)(family::GeneralizedFriendship{f.p, 2});
  }
  Graph operator()(const family::GeneralizedFriendship& f) const {
    require(f.p >= 1 && f.q >= 1, "generalized friendship graph needs p, q >= 1");
    return join(Graph(1), disjoint_copies(complete(f.q), f.p));
  }
  Graph operator()(const family::Wheel& f) const {
    require(f.n >= 4, "wheel needs n >= 4");
    return join(Graph(1), cycle(f.n - 1));
  }
  Graph operator()(const family::Lollipop& f) const {
    require(f.p >= 3 && f.p < f.n, "lollipop needs 3 <= p < n");
    Graph g(f.n);
    for (int v = 0; v < f.p; ++v) g.add_edge(v, (v + 1) % f.p);
    g.add_edge(0, f.p);
    for (int v = f.p; v + 1 < f.n; ++v) g.add_edge(v, v + 1);
    return g;
  }
  Graph operator()(const family::Sandglass& f) const {
    require(f.path >= 2, "sandglass needs a path with at least two vertices");
    const int k = f.path;
    Graph g(k + 4);
    for (int v = 0; v + 1 < k; ++v) g.add_edge(v, v + 1);
    hang_triangle(g, 0, k, k + 1);
    hang_triangle(g, k - 1, k + 2, k + 3);
    return g;
  }
  Graph operator()(const family::Petersen&) const { return complement(line_graph(complete(5))); }
  Graph operator()(const family::Lattice& f) const {
    require(f.q >= 2, "lattice graph needs q >= 2");
    return line_graph(multipartite({f.q, f.q}));
  }
  Graph operator()(const family::Triangular& f) const {
    require(f.k >= 2, "triangular graph needs k >= 2");
    return line_graph(complete(f.k));
  }
  Graph operator()(const family::NiceSunlike& f) const {
    require(f.l >= 3, "sunlike graph needs a cycle of length >= 3");
    std::vector<int> marked;
    int pos = 0;
    for (int s : f.steps) {
      require(s == 4 || s == 6, "sunlike steps must be 4 or 6");
      pos += s;
      marked.push_back(pos);
    }
    require(pos < f.l, "sunlike steps wrap around the cycle");
    const int n = f.l + 1 + 2 * static_cast<int>(marked.size());
    Graph g(n);
    for (int v = 0; v < f.l; ++v) g.add_edge(v, (v + 1) % f.l);
    int next = f.l;
    g.add_edge(0, next++);
    for (int u : marked) {
      g.add_edge(u, next++);
      g.add_edge(u, next++);
    }
    return g;
  }
};

struct Namer {
  std::string operator()(const family::Complete& f) const { return "K" + std::to_string(f.n); }
  std::string operator()(const family::Empty& f) const { return "E" + std::to_string(f.n); }
  std::string operator()(const family::Path& f) const { return "P" + std::to_string(f.n); }
  std::string operator()(const family::Cycle& f) const { return "C" + std::to_string(f.n); }
  std::string operator()(const family::Star& f) const { return "S" + std::to_string(f.n); }
  std::string operator()(const family::CompleteBipartite& f) const {
    return "K" + std::to_string(f.p) + "," + std::to_string(f.q);
  }
  std::string operator()(const family::CompleteMultipartite& f) const {
    std::string s = "K";
    for (std::size_t i = 0; i < f.parts.size(); ++i) s += (i ? "," : "") + std::to_string(f.parts[i]);
    return s;
  }
  std::string operator()(const family::Turan& f) const {
    return "T(" + std::to_string(f.n) + "," + std::to_string(f.k) + ")";
  }
  std::string operator()(const family::Pyramid& f) const {
    return "Pyr(" + std::to_string(f.n) + "," + std::to_string(f.k) + ")";
  }
  std::string operator()(const family::Friendship& f) const { return "F" + std::to_string(f.p); }
  std::string operator()(const family::GeneralizedFriendship& f) const {
    return "F(" + std::to_string(f.p) + "," + std::to_string(f.q) + ")";
  }
  std::string operator()(const family::Wheel& f) const { return "W" + std::to_string(f.n); }
  std::string operator()(const family::Lollipop& f) const {
    return "H(" + std::to_string(f.n) + "," + std::to_string(f.p) + ")";
  }
  std::string operator()(const family::Sandglass& f) const { return "Sg" + std::to_string(f.path); }
  std::string operator()(const family::Petersen&) const { return "Petersen"; }
  std::string operator()(const family::Lattice& f) const { return "L2(" + std::to_string(f.q) + ")"; }
  std::string operator()(const family::Triangular& f) const { return "T" + std::to_string(f.k); }
  std::string operator()(const family::NiceSunlike& f) const {
    return "Sun(" + std::to_string(f.l) + ";" + std::to_string(f.steps.size()) + ")";
  }
};

}  // namespace

std::vector<int> turan_parts(int n, int k) {
  require(k >= 2 && k <= n, "Turan graph needs 2 <= k <= n");
  const int q = n / k, s = n % k;
  std::vector<int> parts(k - s, q);
  parts.insert(parts.end(), s, q + 1);
  return parts;
}

Graph generate(const FamilySpec& spec) { return std::visit(Generator{}, spec); }

std::string family_name(const FamilySpec& spec) { return std::visit(Namer{}, spec); }

}  // namespace specdet
