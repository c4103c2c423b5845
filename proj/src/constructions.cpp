#include "specdet/constructions.hpp"

#include <algorithm>
#include <random>

#include "specdet/canonical.hpp"
#include "specdet/error.hpp"
#include "specdet/spectra.hpp"
#include "specdet/structure.hpp"

namespace specdet {
namespace {

std::vector<char> membership(const Graph& g, const std::vector<int>& set) {
  std::vector<char> in(g.order(), 0);
  for (int v : set) {
    require(v >= 0 && v < g.order(), "vertex " + std::to_string(v) + " out of range");
    require(!in[v], "vertex " + std::to_string(v) + " repeated");
    in[v] = 1;
  }
  return in;
}

void copy_into(Graph& target, const Graph& source, int offset) {
  for (auto [a, b] : source.edges()) target.add_edge(offset + a, offset + b);
}

bool induces_regular(const Graph& g, const std::vector<int>& block) {
  if (block.empty()) return true;
  const auto degs = induced_subgraph(g, block).degrees();
  return std::all_of(degs.begin(), degs.end(), [&](int x) { return x == degs[0]; });
}

}  // namespace

Graph seidel_switch(const Graph& g, const std::vector<int>& u) {
  const auto in = membership(g, u);
  Graph h = g;
  for (int a = 0; a < g.order(); ++a)
    for (int b = a + 1; b < g.order(); ++b)
      if (in[a] != in[b]) h.toggle_edge(a, b);
  return h;
}

bool seidel_regular_condition(const Graph& g, const std::vector<int>& u) {
  const auto report = structure_report(g);
  require(report.regular, "Seidel regularity condition needs a regular graph");
  const auto in = membership(g, u);
  const int n = g.order(), d = *report.degree;
  int k = 0;
  if (!u.empty()) {
    const Graph sub = induced_subgraph(g, u);
    const auto degs = sub.degrees();
    if (!std::all_of(degs.begin(), degs.end(), [&](int x) { return x == degs[0]; })) return false;
    k = degs[0];
  }
  if (static_cast<int>(u.size()) != n - 2 * (d - k)) return false;
  // The size rule only keeps the degrees inside U at d. A vertex outside U
  // with e neighbours in U ends at d - 2e + |U|, so e must be |U| / 2.
  for (int w = 0; w < n; ++w) {
    if (in[w]) continue;
    int e = 0;
    for (int x : u) e += g.adjacent(w, x);
    if (2 * e != static_cast<int>(u.size())) return false;
  }
  return true;
}

std::optional<std::vector<int>> find_seidel_switching_set(const Graph& g, int max_size, std::uint64_t seed,
                                                           bool require_independent) {
  const int n = g.order();
  const CanonicalForm original = canonical_form(g);
  auto good = [&](const std::vector<int>& u) {
    if (require_independent)
      for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = i + 1; j < u.size(); ++j)
          if (g.adjacent(u[i], u[j])) return false;
    return seidel_regular_condition(g, u) && canonical_form(seidel_switch(g, u)) != original;
  };
  // Subset count up to max_size.
  double total = 0, binom = 1;
  for (int s = 1; s <= max_size && s <= n; ++s) {
    binom = binom * (n - s + 1) / s;
    total += binom;
  }
  if (n <= 16 || total <= 2e6) {
    for (int s = 1; s <= max_size && s <= n; ++s) {
      std::vector<int> u(s);
      for (int i = 0; i < s; ++i) u[i] = i;
      while (true) {
        if (good(u)) return u;
        int i = s - 1;
        while (i >= 0 && u[i] == n - s + i) --i;
        if (i < 0) break;
        ++u[i];
        for (int j = i + 1; j < s; ++j) u[j] = u[j - 1] + 1;
      }
    }
    return std::nullopt;
  }
  std::mt19937_64 rng(seed);
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  for (int attempt = 0; attempt < 200000; ++attempt) {
    const int s = 1 + static_cast<int>(rng() % std::min(max_size, n));
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<int> u(all.begin(), all.begin() + s);
    std::sort(u.begin(), u.end());
    if (good(u)) return u;
  }
  return std::nullopt;
}

bool gm_condition(const Graph& g, const std::vector<int>& block) {
  const auto in = membership(g, block);
  const int b = static_cast<int>(block.size());
  if (!induces_regular(g, block)) return false;
  for (int v = 0; v < g.order(); ++v) {
    if (in[v]) continue;
    int c = 0;
    for (int x : block) c += g.adjacent(v, x);
    if (c != 0 && c != b && 2 * c != b) return false;
  }
  return true;
}

Graph gm_switch(const Graph& g, const std::vector<int>& block) {
  const auto in = membership(g, block);
  const int b = static_cast<int>(block.size());
  // Without this the column rule alone does not preserve the spectrum
  // (a K_{1,3} block with one half column creates a triangle).
  require(induces_regular(g, block), "Godsil-McKay block must induce a regular subgraph");
  Graph h = g;
  for (int v = 0; v < g.order(); ++v) {
    if (in[v]) continue;
    int c = 0;
    for (int x : block) c += g.adjacent(v, x);
    if (c == 0 || c == b) continue;
    if (2 * c != b)
      throw PreconditionError("Godsil-McKay condition fails at vertex " + std::to_string(v) + ": " +
                              std::to_string(c) + " neighbours in a block of " + std::to_string(b));
    for (int x : block) h.toggle_edge(v, x);
  }
  return h;
}

Graph coalesce(const Graph& g1, int v1, const Graph& g2, int v2) {
  require(v1 >= 0 && v1 < g1.order(), "coalescence vertex out of range in the first graph");
  require(v2 >= 0 && v2 < g2.order(), "coalescence vertex out of range in the second graph");
  const int n1 = g1.order();
  std::vector<int> map(g2.order());
  for (int v = 0, next = n1; v < g2.order(); ++v) map[v] = v == v2 ? v1 : next++;
  Graph h(n1 + g2.order() - 1);
  copy_into(h, g1, 0);
  for (auto [a, b] : g2.edges()) h.add_edge(map[a], map[b]);
  return h;
}

std::pair<Graph, Graph> schwenk_pair(const Graph& g1, int v1, const Graph& g2, int v2, const Graph& gamma, int u) {
  const std::vector<MatrixKind> a{MatrixKind::A};
  if (!are_cospectral(g1, g2, a)) throw PreconditionError("Schwenk seeds are not A-cospectral");
  if (!are_cospectral(delete_vertex(g1, v1), delete_vertex(g2, v2), a))
    throw PreconditionError("Schwenk seeds minus the chosen vertices are not A-cospectral");
  auto out = std::make_pair(coalesce(g1, v1, gamma, u), coalesce(g2, v2, gamma, u));
  if (!are_cospectral(out.first, out.second, a)) throw std::logic_error("Schwenk coalescences differ in spectrum");
  return out;
}

Graph duplication(const Graph& g) {
  const int n = g.order();
  Graph h(2 * n);
  for (auto [a, b] : g.edges()) {
    h.add_edge(a, n + b);
    h.add_edge(b, n + a);
  }
  return h;
}

Graph corona_product(CoronaKind kind, const Graph& g, const Graph& h) {
  const int n1 = g.order(), n2 = h.order();
  const auto es = g.edges();
  const int m1 = static_cast<int>(es.size());
  const bool dup = kind == CoronaKind::duplication || kind == CoronaKind::duplication_neighborhood ||
                   kind == CoronaKind::duplication_edge;
  const bool per_edge = kind == CoronaKind::edge || kind == CoronaKind::duplication_edge;
  const int base = dup ? 2 * n1 : n1;
  const int copies = per_edge ? m1 : n1;
  Graph out(base + copies * n2);
  if (dup) copy_into(out, duplication(g), 0);
  else copy_into(out, g, 0);
  auto copy_start = [&](int c) { return base + c * n2; };
  for (int c = 0; c < copies; ++c) copy_into(out, h, copy_start(c));
  auto attach = [&](int vertex, int c) {
    for (int t = 0; t < n2; ++t) out.add_edge(vertex, copy_start(c) + t);
  };
  switch (kind) {
    case CoronaKind::corona:
    case CoronaKind::duplication:
      for (int i = 0; i < n1; ++i) attach(i, i);
      break;
    case CoronaKind::edge:
    case CoronaKind::duplication_edge:
      for (int j = 0; j < m1; ++j) {
        attach(es[j].first, j);
        attach(es[j].second, j);
      }
      break;
    case CoronaKind::duplication_neighborhood:
      for (int i = 0; i < n1; ++i)
        for (int j : g.neighbors(i)) attach(n1 + j, i);
      break;
    case CoronaKind::closed_neighborhood:
      for (int i = 0; i < n1; ++i) {
        attach(i, i);
        for (int j : g.neighbors(i)) attach(j, i);
      }
      break;
  }
  return out;
}

Graph subdivision(const Graph& g) {
  const int n = g.order();
  const auto es = g.edges();
  Graph h(n + static_cast<int>(es.size()));
  for (std::size_t j = 0; j < es.size(); ++j) {
    h.add_edge(es[j].first, n + static_cast<int>(j));
    h.add_edge(es[j].second, n + static_cast<int>(j));
  }
  return h;
}

Graph bipartite_incidence(const Graph& g) {
  Graph h = subdivision(g);
  for (auto [a, b] : g.edges()) h.add_edge(a, b);
  return h;
}

Graph sb_join(SbJoinKind kind, const Graph& g1, const Graph& g2) {
  const int n1 = g1.order(), n2 = g2.order();
  const int m1 = static_cast<int>(g1.size()), m2 = static_cast<int>(g2.size());
  const Graph s = subdivision(g1), r = bipartite_incidence(g2);
  Graph h(n1 + m1 + n2 + m2);
  copy_into(h, s, 0);
  const int off = n1 + m1;
  copy_into(h, r, off);
  auto connect = [&](int lo1, int hi1, int lo2, int hi2) {
    for (int a = lo1; a < hi1; ++a)
      for (int b = lo2; b < hi2; ++b) h.add_edge(a, off + b);
  };
  switch (kind) {
    case SbJoinKind::vv: connect(0, n1, 0, n2); break;
    case SbJoinKind::ee: connect(n1, n1 + m1, n2, n2 + m2); break;
    case SbJoinKind::ev: connect(n1, n1 + m1, 0, n2); break;
    case SbJoinKind::ve: connect(0, n1, n2, n2 + m2); break;
  }
  return h;
}

Graph splitting_join(SplitKind kind, const Graph& g, const Graph& h) {
  const int n = g.order(), nh = h.order();
  Graph out(2 * n + nh);
  copy_into(out, g, 0);
  copy_into(out, h, 2 * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < nh; ++b) out.add_edge(a, 2 * n + b);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const bool link = kind == SplitKind::NS ? g.adjacent(i, j) : !g.adjacent(i, j);
      if (link) out.add_edge(n + i, j);
    }
  return out;
}

}  // namespace specdet
