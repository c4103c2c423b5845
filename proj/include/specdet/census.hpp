#pragma once

#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "specdet/canonical.hpp"
#include "specdet/fingerprint_cache.hpp"
#include "specdet/graph.hpp"
#include "specdet/spectra.hpp"

namespace specdet {

struct CospectralClass {
  SpectralFingerprint fingerprint;
  std::vector<Graph> members;  // canonical graphs, ordered by canonical form
};

// Classes ordered by their smallest member's canonical form.
std::vector<CospectralClass> cospectral_classes(const std::vector<Graph>& graphs,
                                                const std::vector<MatrixKind>& kinds, int jobs = 1);

struct DsVerdict {
  std::vector<Graph> mates;  // canonical, ordered by canonical form
  bool ds() const { return mates.empty(); }
};

// Searches every graph on |V(G)| vertices; n = 10 needs allow_n10.
DsVerdict ds_verdict(const Graph& g, const std::vector<MatrixKind>& kinds, int jobs = 1, bool allow_n10 = false);

struct CensusRow {
  int n = 0;
  std::vector<MatrixKind> kinds;
  long long total = 0;  // isomorphism classes on n vertices
  long long class_count = 0;
  long long singleton_count = 0;
  long long largest = 0;
  std::vector<std::vector<std::string>> nics_classes;  // graph6 members of each class of size >= 2
  double ds_fraction() const { return total ? static_cast<double>(singleton_count) / total : 1.0; }
};

struct CensusOptions {
  int jobs = 1;
  bool allow_n10 = false;
  FingerprintCache* cache = nullptr;
  long checkpoint_every = 100000;  // cache flush interval, in graphs
  std::function<void(long long done)> progress;
};

CensusRow ds_census(int n, const std::vector<MatrixKind>& kinds, const CensusOptions& options = {});

nlohmann::json census_row_json(const CensusRow& row);

}  // namespace specdet
