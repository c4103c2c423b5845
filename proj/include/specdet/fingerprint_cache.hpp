#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "specdet/spectra.hpp"

namespace specdet {

// Characteristic polynomials on disk, one tab-separated file per vertex count,
// keyed by the canonical form's hex string. Lookups hash the key and compare it
// in full, so a hash collision can never return another graph's polynomial.
class FingerprintCache {
 public:
  explicit FingerprintCache(std::filesystem::path dir);

  // SPECDET_CACHE if set, otherwise the fallback (possibly empty = no cache).
  static std::optional<std::filesystem::path> resolve_dir(const std::optional<std::filesystem::path>& fallback);

  std::optional<CharPoly> find(const std::string& hex, MatrixKind kind);
  void insert(const std::string& hex, MatrixKind kind, const CharPoly& p);
  // Appends pending entries to disk.
  void flush();

  long hits() const { return hits_; }
  long misses() const { return misses_; }

 private:
  std::filesystem::path file_for(int n) const;
  void load(int n);

  std::filesystem::path dir_;
  std::map<int, bool> loaded_;
  std::unordered_map<std::string, std::map<MatrixKind, CharPoly>> table_;
  std::vector<std::string> pending_;  // serialized lines, grouped by n at flush
  long hits_ = 0, misses_ = 0;
};

}  // namespace specdet
