#include "specdet/structure.hpp"

#include <algorithm>
#include <bit>
#include <deque>

namespace specdet {

std::vector<int> bfs_distances(const Graph& g, int source) {
  std::vector<int> dist(g.order(), -1);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int v : g.neighbors(u))
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
  }
  return dist;
}

long long triangle_count(const Graph& g) {
  long long t = 0;
  for (int u = 0; u < g.order(); ++u)
    for (int v : g.neighbors(u)) {
      if (v <= u) continue;
      auto ru = g.row(u), rv = g.row(v);
      for (int w = 0; w < g.words(); ++w) {
        std::uint64_t common = ru[w] & rv[w];
        // count only w > v
        if (w == (v >> 6)) common &= ~((std::uint64_t{2} << (v & 63)) - 1);
        else if (w < (v >> 6)) common = 0;
        t += std::popcount(common);
      }
    }
  return t;
}

StructureReport structure_report(const Graph& g) {
  const int n = g.order();
  StructureReport r;
  r.edges = g.size();
  r.degrees = g.degrees();
  r.regular = n == 0 || std::all_of(r.degrees.begin(), r.degrees.end(),
                                    [&](int d) { return d == r.degrees[0]; });
  if (r.regular) r.degree = n ? r.degrees[0] : 0;
  r.isolated = static_cast<int>(std::count(r.degrees.begin(), r.degrees.end(), 0));

  r.component_of.assign(n, -1);
  std::vector<int> side(n, -1);
  bool all_bipartite = true;
  for (int s = 0; s < n; ++s) {
    if (r.component_of[s] >= 0) continue;
    const int c = r.components++;
    bool bip = true;
    std::deque<int> queue{s};
    r.component_of[s] = c;
    side[s] = 0;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int v : g.neighbors(u)) {
        if (r.component_of[v] < 0) {
          r.component_of[v] = c;
          side[v] = 1 - side[u];
          queue.push_back(v);
        } else if (side[v] == side[u]) {
          bip = false;
        }
      }
    }
    if (bip) ++r.bipartite_components;
    all_bipartite = all_bipartite && bip;
  }
  if (all_bipartite) r.bipartition = side;

  // Girth: shortest cycle through BFS from every vertex.
  int best = 0;
  for (int s = 0; s < n; ++s) {
    std::vector<int> dist(n, -1), parent(n, -1);
    std::deque<int> queue{s};
    dist[s] = 0;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int v : g.neighbors(u)) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          queue.push_back(v);
        } else if (parent[u] != v) {
          int len = dist[u] + dist[v] + 1;
          if (best == 0 || len < best) best = len;
        }
      }
    }
  }
  if (best) r.girth = best;

  if (n > 0 && r.components == 1) {
    int diam = 0;
    for (int s = 0; s < n; ++s) {
      auto d = bfs_distances(g, s);
      diam = std::max(diam, *std::max_element(d.begin(), d.end()));
    }
    r.diameter = diam;
  }
  r.triangles = triangle_count(g);
  return r;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  auto d = bfs_distances(g, 0);
  return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

bool is_bipartite(const Graph& g) {
  const int n = g.order();
  std::vector<int> side(n, -1);
  for (int s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int v : g.neighbors(u)) {
        if (side[v] < 0) {
          side[v] = 1 - side[u];
          queue.push_back(v);
        } else if (side[v] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace specdet
