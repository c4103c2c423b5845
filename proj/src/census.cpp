#include "specdet/census.hpp"

#include <algorithm>
#include <map>
#include <thread>

#include "specdet/enumerate.hpp"
#include "specdet/error.hpp"
#include "specdet/graph_io.hpp"

namespace specdet {
namespace {

// Fingerprints of graphs[i] for i in [begin, end), spread over jobs threads.
// Slot i is written only by one worker, so the result is order-independent.
void fingerprint_range(const std::vector<Graph>& graphs, std::size_t begin, std::size_t end,
                       const std::vector<MatrixKind>& kinds, int jobs, std::vector<SpectralFingerprint>& out) {
  auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t i = begin + first; i < end; i += stride) out[i] = fingerprint(graphs[i], kinds);
  };
  if (jobs <= 1 || end - begin < 64) {
    work(0, 1);
    return;
  }
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) pool.emplace_back(work, static_cast<std::size_t>(t), static_cast<std::size_t>(jobs));
  for (auto& th : pool) th.join();
}

void check_cap(int n, bool allow_n10) {
  require(n >= 1, "vertex count must be positive");
  require(n <= 10, "vertex count above the enumeration cap of 10");
  require(n < 10 || allow_n10, "n = 10 runs for hours; pass --allow-n10 to confirm");
}

}  // namespace

std::vector<CospectralClass> cospectral_classes(const std::vector<Graph>& graphs,
                                                const std::vector<MatrixKind>& kinds, int jobs) {
  std::vector<SpectralFingerprint> fps(graphs.size());
  fingerprint_range(graphs, 0, graphs.size(), kinds, jobs, fps);

  struct Member {
    CanonicalForm form;
    std::size_t index;
  };
  std::map<std::string, std::vector<Member>> groups;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    auto& group = groups[fingerprint_key(fps[i])];
    auto form = canonical_form(graphs[i]);
    const bool dup = std::any_of(group.begin(), group.end(), [&](const Member& m) { return m.form == form; });
    if (!dup) group.push_back({std::move(form), i});
  }

  std::vector<std::pair<CanonicalForm, CospectralClass>> keyed;
  for (auto& [key, members] : groups) {
    std::sort(members.begin(), members.end(), [](const Member& a, const Member& b) { return a.form < b.form; });
    CospectralClass c;
    c.fingerprint = fps[members.front().index];
    for (const auto& m : members) c.members.push_back(m.form.graph());
    keyed.emplace_back(members.front().form, std::move(c));
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<CospectralClass> out;
  for (auto& kc : keyed) out.push_back(std::move(kc.second));
  return out;
}

DsVerdict ds_verdict(const Graph& g, const std::vector<MatrixKind>& kinds, int jobs, bool allow_n10) {
  const int n = g.order();
  check_cap(n, allow_n10);
  require(!kinds.empty(), "at least one matrix kind is required");
  const auto target = fingerprint(g, kinds);
  const auto self = canonical_form(g);

  // A, L and Q spectra all fix the edge count, which filters most candidates
  // before any polynomial work.
  const bool edges_fixed = std::any_of(kinds.begin(), kinds.end(), [](MatrixKind k) {
    return k == MatrixKind::A || k == MatrixKind::L || k == MatrixKind::Q;
  });
  std::vector<CanonicalForm> mates;
  enumerate_graphs(
      n,
      [&](const Graph& h) {
        if (edges_fixed && h.size() != g.size()) return;
        for (auto k : kinds)
          if (char_poly(h, k) != target.at(k)) return;
        auto form = form_of_canonical(h);
        if (form != self) mates.push_back(std::move(form));
      },
      {allow_n10, jobs});
  std::sort(mates.begin(), mates.end());
  DsVerdict v;
  for (const auto& f : mates) v.mates.push_back(f.graph());
  return v;
}

CensusRow ds_census(int n, const std::vector<MatrixKind>& kinds, const CensusOptions& options) {
  check_cap(n, options.allow_n10);
  require(!kinds.empty(), "at least one matrix kind is required");

  struct Group {
    long long size = 0;
    std::vector<CanonicalForm> members;
  };
  std::map<std::string, Group> groups;
  long long done = 0;
  std::vector<Graph> batch;
  const std::size_t batch_size = static_cast<std::size_t>(std::max(1L, options.checkpoint_every));

  auto drain = [&] {
    std::vector<SpectralFingerprint> fps(batch.size());
    std::vector<CanonicalForm> forms(batch.size());
    std::vector<std::string> hexes(batch.size());
    std::vector<Graph> todo;
    std::vector<std::size_t> todo_index;
    for (std::size_t i = 0; i < batch.size(); ++i) {
      forms[i] = form_of_canonical(batch[i]);
      bool complete = options.cache != nullptr;
      if (options.cache) {
        hexes[i] = forms[i].hex();
        for (auto k : kinds) {
          auto hit = options.cache->find(hexes[i], k);
          if (!hit) {
            complete = false;
            break;
          }
          fps[i][k] = std::move(*hit);
        }
      }
      if (!complete) {
        todo.push_back(batch[i]);
        todo_index.push_back(i);
      }
    }
    std::vector<SpectralFingerprint> fresh(todo.size());
    fingerprint_range(todo, 0, todo.size(), kinds, options.jobs, fresh);
    for (std::size_t j = 0; j < todo.size(); ++j) {
      const std::size_t i = todo_index[j];
      fps[i] = std::move(fresh[j]);
      if (options.cache)
        for (const auto& [k, p] : fps[i]) options.cache->insert(hexes[i], k, p);
    }
    if (options.cache) options.cache->flush();
    for (std::size_t i = 0; i < batch.size(); ++i) {
      auto& grp = groups[fingerprint_key(fps[i])];
      ++grp.size;
      grp.members.push_back(std::move(forms[i]));
    }
    done += static_cast<long long>(batch.size());
    batch.clear();
    if (options.progress) options.progress(done);
  };

  enumerate_graphs(
      n,
      [&](const Graph& g) {
        batch.push_back(g);
        if (batch.size() >= batch_size) drain();
      },
      {options.allow_n10, options.jobs});
  drain();

  CensusRow row;
  row.n = n;
  row.kinds = kinds;
  std::sort(row.kinds.begin(), row.kinds.end());
  row.total = done;
  row.class_count = static_cast<long long>(groups.size());
  std::vector<std::vector<CanonicalForm>> nics;
  for (auto& [key, grp] : groups) {
    if (grp.size == 1) ++row.singleton_count;
    row.largest = std::max(row.largest, grp.size);
    if (grp.size >= 2) {
      std::sort(grp.members.begin(), grp.members.end());
      nics.push_back(std::move(grp.members));
    }
  }
  std::sort(nics.begin(), nics.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  for (const auto& cls : nics) {
    std::vector<std::string> g6;
    for (const auto& f : cls) g6.push_back(emit_graph6(f.graph()));
    row.nics_classes.push_back(std::move(g6));
  }
  return row;
}

nlohmann::json census_row_json(const CensusRow& row) {
  nlohmann::json kinds = nlohmann::json::array();
  for (auto k : row.kinds) kinds.push_back(kind_name(k));
  return {{"n", row.n},
          {"kinds", kinds},
          {"total", row.total},
          {"classCount", row.class_count},
          {"singletonCount", row.singleton_count},
          {"largest", row.largest},
          {"dsFraction", row.ds_fraction()},
          {"nicsClasses", row.nics_classes}};
}

}  // namespace specdet
