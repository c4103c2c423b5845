#include "specdet/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <thread>

#include "specdet/canonical.hpp"
#include "specdet/error.hpp"
#include "specdet/structure.hpp"

namespace specdet {
namespace {

// Degree window for the regular search; unbounded for the plain census.
struct Bounds {
  int n = 0;
  int d = -1;

  bool admits(const std::vector<int>& deg) const {
    if (d < 0) return true;
    const int k = static_cast<int>(deg.size());
    const int remaining = n - k;
    long long deficit = 0;
    for (int x : deg) {
      if (x > d || d - x > remaining) return false;
      deficit += d - x;
    }
    return deficit <= static_cast<long long>(d) * remaining;
  }
};

std::vector<std::uint64_t> masks_of(const Graph& g) {
  std::vector<std::uint64_t> m(g.order());
  for (int v = 0; v < g.order(); ++v) m[v] = g.row(v)[0];
  return m;
}

// Children of a parent on k vertices, one per isomorphism class whose canonical
// deletion vertex lands in the new vertex's orbit.
void children(const Graph& parent, const Bounds& bounds, std::vector<Graph>& out) {
  const int k = parent.order();
  const auto pm = masks_of(parent);
  std::vector<int> pdeg(k);
  for (int v = 0; v < k; ++v) pdeg[v] = std::popcount(pm[v]);
  std::set<CanonicalForm> seen;
  std::vector<int> deg(k + 1);
  std::vector<long long> nsum(k + 1);

  for (std::uint64_t s = 0; s < (std::uint64_t{1} << k); ++s) {
    const int ds = std::popcount(s);
    for (int v = 0; v < k; ++v) deg[v] = pdeg[v] + static_cast<int>((s >> v) & 1);
    deg[k] = ds;
    if (!bounds.admits(deg)) continue;

    long long new_sum = 0;
    for (std::uint64_t t = s; t; t &= t - 1) new_sum += deg[std::countr_zero(t)];
    bool minimal = true;
    for (int v = 0; v < k && minimal; ++v) {
      if (deg[v] > ds) continue;
      long long sum = (s >> v) & 1 ? ds : 0;
      for (std::uint64_t t = pm[v]; t; t &= t - 1) sum += deg[std::countr_zero(t)];
      nsum[v] = sum;
      if (deg[v] < ds || sum < new_sum) minimal = false;
    }
    if (!minimal) continue;

    Graph child(k + 1);
    for (int v = 0; v < k; ++v)
      for (std::uint64_t t = pm[v] & ~((std::uint64_t{2} << v) - 1); t; t &= t - 1)
        child.add_edge(v, std::countr_zero(t));
    for (std::uint64_t t = s; t; t &= t - 1) child.add_edge(std::countr_zero(t), k);

    const auto lab = canonical_labeling(child);
    // Deletion vertex: among minimal (degree, neighbour-degree sum) vertices,
    // the one placed last by the canonical labeling.
    int w = -1;
    for (int i = k; i >= 0 && w < 0; --i) {
      const int v = lab.order[i];
      if (v == k || (deg[v] == ds && nsum[v] == new_sum)) w = v;
    }
    if (lab.orbit[w] != lab.orbit[k]) continue;
    if (!seen.insert(lab.form).second) continue;
    out.push_back(lab.form.graph());
  }
}

void descend(const Graph& g, int n, const Bounds& bounds, const GraphVisitor& visit) {
  if (g.order() == n) {
    visit(g);
    return;
  }
  std::vector<Graph> next;
  children(g, bounds, next);
  for (const auto& c : next) descend(c, n, bounds, visit);
}

void run(int n, const Bounds& bounds, const GraphVisitor& visit, int jobs) {
  if (n == 0) {
    visit(Graph(0));
    return;
  }
  if (jobs <= 1 || n < 7) {
    descend(Graph(1), n, bounds, visit);
    return;
  }
  std::vector<Graph> parents;
  descend(Graph(1), n - 1, bounds, [&](const Graph& g) { parents.push_back(g); });
  const std::size_t chunk = 4096;
  for (std::size_t base = 0; base < parents.size(); base += chunk) {
    const std::size_t end = std::min(parents.size(), base + chunk);
    std::vector<std::vector<Graph>> results(end - base);
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t)
      pool.emplace_back([&, t] {
        for (std::size_t i = base + t; i < end; i += jobs) children(parents[i], bounds, results[i - base]);
      });
    for (auto& th : pool) th.join();
    for (const auto& r : results)
      for (const auto& g : r) visit(g);
  }
}

}  // namespace

long long known_graph_count(int n) {
  static const long long counts[] = {1, 1, 2, 4, 11, 34, 156, 1044, 12346, 274668, 12005168};
  require(n >= 0 && n <= 10, "known counts cover n = 0..10");
  return counts[n];
}

void enumerate_graphs(int n, const GraphVisitor& visit, const EnumerationOptions& options,
                      const GraphPredicate& predicate) {
  require(n >= 0, "vertex count must be non-negative");
  require(n <= 10, "enumeration is capped at n = 10");
  require(n < 10 || options.allow_n10, "n = 10 enumeration needs the explicit long-running flag");
  Bounds bounds{n, -1};
  if (predicate)
    run(n, bounds, [&](const Graph& g) { if (predicate(g)) visit(g); }, options.jobs);
  else
    run(n, bounds, visit, options.jobs);
}

std::vector<Graph> all_graphs(int n, const EnumerationOptions& options, const GraphPredicate& predicate) {
  std::vector<Graph> out;
  enumerate_graphs(n, [&](const Graph& g) { out.push_back(g); }, options, predicate);
  return out;
}

void enumerate_regular(int n, int d, const GraphVisitor& visit, bool connected_only) {
  require(n >= 1 && n <= 64, "regular enumeration needs 1 <= n <= 64");
  require(d >= 0 && d < n, "regular enumeration needs 0 <= d < n");
  if ((n * d) % 2 != 0) throw PreconditionError("no " + std::to_string(d) + "-regular graph on " +
                                               std::to_string(n) + " vertices: nd is odd");
  Bounds bounds{n, d};
  descend(Graph(1), n, bounds, [&](const Graph& g) {
    if (!connected_only || is_connected(g)) visit(g);
  });
}

std::vector<Graph> all_regular(int n, int d, bool connected_only) {
  std::vector<Graph> out;
  enumerate_regular(n, d, [&](const Graph& g) { out.push_back(g); }, connected_only);
  return out;
}

}  // namespace specdet
