#include "specdet/canonical.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace specdet {
namespace {

struct Partition {
  std::vector<int> lab;
  std::vector<int> len;  // len[s] > 0 iff a cell starts at position s
  int cells = 0;
};

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

class Search {
 public:
  explicit Search(const Graph& g) : g_(g), n_(g.order()), w_(g.words()) {}

  CanonicalLabeling run() {
    Partition p;
    p.lab.resize(n_);
    std::iota(p.lab.begin(), p.lab.end(), 0);
    p.len.assign(n_, 0);
    if (n_ > 0) {
      p.len[0] = n_;
      p.cells = 1;
    }
    // Start from the degree partition.
    if (n_ > 0) inv_.push_back(refine(p, {0}));
    std::vector<int> path;
    descend(p, path, true);

    CanonicalLabeling out;
    out.order = best_lab_;
    out.generators = std::move(gens_);
    UnionFind uf(n_);
    for (const auto& gamma : out.generators)
      for (int v = 0; v < n_; ++v) uf.unite(v, gamma[v]);
    out.orbit.resize(n_);
    for (int v = 0; v < n_; ++v) out.orbit[v] = uf.find(v);
    out.form.n = n_;
    out.form.rows = std::move(best_rows_);
    return out;
  }

 private:
  std::uint64_t refine(Partition& p, std::vector<int> seeds) {
    std::uint64_t trace = 0x9e3779b97f4a7c15ull;
    auto mix = [&trace](std::uint64_t x) {
      trace ^= x + 0x9e3779b97f4a7c15ull + (trace << 6) + (trace >> 2);
    };
    std::vector<char> queued(n_, 0);
    std::vector<int> queue;
    queue.reserve(n_);
    for (int s : seeds) {
      queue.push_back(s);
      queued[s] = 1;
    }
    std::vector<std::uint64_t> mask(w_);
    std::vector<int> count(n_);
    std::size_t head = 0;
    while (head < queue.size() && p.cells < n_) {
      const int s = queue[head++];
      queued[s] = 0;
      std::fill(mask.begin(), mask.end(), 0);
      for (int i = s; i < s + p.len[s]; ++i) mask[p.lab[i] >> 6] |= std::uint64_t{1} << (p.lab[i] & 63);

      for (int c = 0; c < n_;) {
        const int L = p.len[c];
        if (L == 1) {
          ++c;
          continue;
        }
        bool uniform = true;
        for (int i = c; i < c + L; ++i) {
          const int v = p.lab[i];
          auto row = g_.row(v);
          int k = 0;
          for (int w = 0; w < w_; ++w) k += std::popcount(row[w] & mask[w]);
          count[v] = k;
          if (count[v] != count[p.lab[c]]) uniform = false;
        }
        if (!uniform) {
          std::sort(p.lab.begin() + c, p.lab.begin() + c + L, [&](int a, int b) {
            return count[a] != count[b] ? count[a] < count[b] : a < b;
          });
          std::vector<int> starts;
          int largest = c, largest_len = 0;
          for (int i = c; i < c + L;) {
            int j = i;
            while (j < c + L && count[p.lab[j]] == count[p.lab[i]]) ++j;
            p.len[i] = j - i;
            mix((static_cast<std::uint64_t>(i) << 40) ^ (static_cast<std::uint64_t>(count[p.lab[i]]) << 20) ^
                static_cast<std::uint64_t>(j - i));
            starts.push_back(i);
            if (j - i > largest_len) {
              largest_len = j - i;
              largest = i;
            }
            i = j;
          }
          p.cells += static_cast<int>(starts.size()) - 1;
          const bool was_queued = queued[c];
          for (int f : starts) {
            if (queued[f] || (!was_queued && f == largest)) continue;
            queued[f] = 1;
            queue.push_back(f);
          }
        }
        c += L;
      }
    }
    mix(static_cast<std::uint64_t>(p.cells));
    return trace;
  }

  // Lexicographic comparison of the current invariant path with the best leaf's.
  int compare_to_best() const {
    for (std::size_t i = 0; i < inv_.size(); ++i) {
      if (i >= best_inv_.size()) return 1;
      if (inv_[i] != best_inv_[i]) return inv_[i] > best_inv_[i] ? 1 : -1;
    }
    return inv_.size() == best_inv_.size() ? 0 : -1;
  }

  // Returns the depth the search should resume at. eq_first: invariants so far
  // match the first leaf's path.
  int descend(Partition& p, std::vector<int>& path, bool eq_first) {
    const int depth = static_cast<int>(path.size());
    if (p.cells == n_) return leaf(p, path, eq_first);

    int target = 0;
    while (p.len[target] == 1) target += p.len[target];
    std::vector<int> cell(p.lab.begin() + target, p.lab.begin() + target + p.len[target]);
    std::sort(cell.begin(), cell.end());

    // Leaves under a child with a smaller invariant can never be canonical, so
    // only children attaining the maximum are searched. Automorphic children
    // share invariants, so the first path still sees every orbit it needs.
    std::vector<Partition> children(cell.size());
    std::vector<std::uint64_t> hs(cell.size());
    std::uint64_t top = 0;
    for (std::size_t i = 0; i < cell.size(); ++i) {
      Partition& child = children[i];
      child = p;
      auto pos = std::find(child.lab.begin() + target, child.lab.begin() + target + p.len[target], cell[i]);
      std::iter_swap(child.lab.begin() + target, pos);
      child.len[target + 1] = p.len[target] - 1;
      child.len[target] = 1;
      ++child.cells;
      hs[i] = refine(child, {target});
      top = std::max(top, hs[i]);
    }

    std::vector<int> explored;
    for (std::size_t i = 0; i < cell.size(); ++i) {
      if (hs[i] != top) continue;
      const int v = cell[i];
      if (!explored.empty()) {
        UnionFind uf(n_);
        for (const auto& gamma : gens_) {
          bool fixes = true;
          for (int x : path)
            if (gamma[x] != x) {
              fixes = false;
              break;
            }
          if (!fixes) continue;
          for (int x = 0; x < n_; ++x) uf.unite(x, gamma[x]);
        }
        const int rv = uf.find(v);
        bool seen = false;
        for (int u : explored)
          if (uf.find(u) == rv) {
            seen = true;
            break;
          }
        if (seen) continue;
      }
      explored.push_back(v);
      Partition& child = children[i];
      const std::uint64_t h = top;

      const std::size_t level = static_cast<std::size_t>(depth) + 1;
      inv_.push_back(h);
      bool ef = true;
      if (have_leaf_) {
        ef = eq_first && level < first_inv_.size() && first_inv_[level] == h;
        if (!ef && compare_to_best_prefix() < 0) {
          inv_.pop_back();
          continue;
        }
      }
      path.push_back(v);
      const int resume = descend(child, path, ef);
      path.pop_back();
      inv_.pop_back();
      if (resume < depth) return resume;
    }
    return depth;
  }

  // Prefix-only comparison: equal prefixes compare as 0 whatever the lengths.
  int compare_to_best_prefix() const {
    for (std::size_t i = 0; i < inv_.size(); ++i) {
      if (i >= best_inv_.size()) return 1;
      if (inv_[i] != best_inv_[i]) return inv_[i] > best_inv_[i] ? 1 : -1;
    }
    return 0;
  }

  int leaf(const Partition& p, const std::vector<int>& path, bool eq_first) {
    const int cmp_best = compare_to_best();
    const int depth = static_cast<int>(path.size());
    std::vector<int> pos(n_);
    for (int i = 0; i < n_; ++i) pos[p.lab[i]] = i;
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n_) * w_, 0);
    for (int i = 0; i < n_; ++i) {
      auto row = g_.row(p.lab[i]);
      for (int w = 0; w < w_; ++w) {
        auto bits = row[w];
        while (bits) {
          const int j = pos[w * 64 + std::countr_zero(bits)];
          rows[static_cast<std::size_t>(i) * w_ + (j >> 6)] |= std::uint64_t{1} << (j & 63);
          bits &= bits - 1;
        }
      }
    }
    if (!have_leaf_) {
      have_leaf_ = true;
      first_rows_ = best_rows_ = std::move(rows);
      first_lab_ = best_lab_ = p.lab;
      first_path_ = best_path_ = path;
      first_inv_ = best_inv_ = inv_;
      return depth;
    }
    if (eq_first && rows == first_rows_) {
      record(p.lab, first_lab_);
      return common_prefix(path, first_path_);
    }
    if (cmp_best == 0 && rows == best_rows_) {
      record(p.lab, best_lab_);
      return common_prefix(path, best_path_);
    }
    if (cmp_best > 0 || (cmp_best == 0 && rows > best_rows_)) {
      best_rows_ = std::move(rows);
      best_lab_ = p.lab;
      best_path_ = path;
      best_inv_ = inv_;
    }
    return depth;
  }

  void record(const std::vector<int>& lab, const std::vector<int>& target) {
    std::vector<int> gamma(n_);
    for (int i = 0; i < n_; ++i) gamma[lab[i]] = target[i];
    gens_.push_back(std::move(gamma));
  }

  static int common_prefix(const std::vector<int>& a, const std::vector<int>& b) {
    int k = 0;
    while (k < static_cast<int>(a.size()) && k < static_cast<int>(b.size()) && a[k] == b[k]) ++k;
    return k;
  }

  const Graph& g_;
  const int n_;
  const int w_;
  bool have_leaf_ = false;
  std::vector<std::uint64_t> first_rows_, best_rows_;
  std::vector<int> first_lab_, best_lab_, first_path_, best_path_;
  std::vector<std::uint64_t> inv_, first_inv_, best_inv_;
  std::vector<std::vector<int>> gens_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) {
  return Search(g).run();
}

CanonicalForm canonical_form(const Graph& g) { return canonical_labeling(g).form; }

Graph canonical_graph(const Graph& g) { return canonical_form(g).graph(); }

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  auto da = a.degrees(), db = b.degrees();
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return canonical_form(a) == canonical_form(b);
}

CanonicalForm form_of_canonical(const Graph& g) {
  CanonicalForm f;
  f.n = g.order();
  f.rows.reserve(static_cast<std::size_t>(f.n) * g.words());
  for (int v = 0; v < f.n; ++v) {
    auto r = g.row(v);
    f.rows.insert(f.rows.end(), r.begin(), r.end());
  }
  return f;
}

Graph CanonicalForm::graph() const {
  Graph g(n);
  const int w = (n + 63) / 64;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if ((rows[static_cast<std::size_t>(i) * w + (j >> 6)] >> (j & 63)) & 1u) g.add_edge(i, j);
  return g;
}

std::string CanonicalForm::hex() const {
  static const char* digits = "0123456789abcdef";
  const int w = (n + 63) / 64;
  std::string out;
  unsigned acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | ((rows[static_cast<std::size_t>(i) * w + (j >> 6)] >> (j & 63)) & 1u);
      if (++filled == 4) {
        out.push_back(digits[acc]);
        acc = 0;
        filled = 0;
      }
    }
  if (filled) out.push_back(digits[acc << (4 - filled)]);
  return std::to_string(n) + ":" + out;
}

std::size_t CanonicalForm::hash() const {
  std::size_t h = 0xcbf29ce484222325ull ^ static_cast<std::size_t>(n);
  for (auto r : rows) {
    h ^= r + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace specdet
