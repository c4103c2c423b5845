#include "specdet/fingerprint_cache.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "specdet/error.hpp"

namespace specdet {
namespace {

int order_of(const std::string& hex) {
  const auto colon = hex.find(':');
  require(colon != std::string::npos, "malformed canonical key");
  return std::stoi(hex.substr(0, colon));
}

std::string serialize(const std::string& hex, MatrixKind kind, const CharPoly& p) {
  std::string line = hex + '\t' + kind_name(kind) + '\t';
  const auto& c = p.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) line += ',';
    line += c[i].get_str();
  }
  return line;
}

}  // namespace

FingerprintCache::FingerprintCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) throw IoError("cannot create cache directory " + dir_.string() + ": " + ec.message());
}

std::optional<std::filesystem::path> FingerprintCache::resolve_dir(
    const std::optional<std::filesystem::path>& fallback) {
  if (const char* env = std::getenv("SPECDET_CACHE"); env && *env) return std::filesystem::path(env);
  return fallback;
}

std::filesystem::path FingerprintCache::file_for(int n) const {
  return dir_ / ("fingerprints-n" + std::to_string(n) + ".tsv");
}

void FingerprintCache::load(int n) {
  if (loaded_[n]) return;
  loaded_[n] = true;
  std::ifstream in(file_for(n), std::ios::binary);
  if (!in) return;
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();
  // whatever follows the last newline is a torn write from an interrupted run
  const auto last = text.rfind('\n');
  text.resize(last == std::string::npos ? 0 : last + 1);
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream fields(line);
    std::string hex, kind, coeffs;
    if (!std::getline(fields, hex, '\t') || !std::getline(fields, kind, '\t') || !std::getline(fields, coeffs))
      continue;
    std::vector<Rational> c;
    std::istringstream parts(coeffs);
    std::string part;
    bool ok = true;
    while (std::getline(parts, part, ',')) {
      Rational r;
      if (r.set_str(part, 10) != 0) {
        ok = false;
        break;
      }
      r.canonicalize();
      c.push_back(r);
    }
    if (!ok || c.empty()) continue;
    table_[hex][parse_kind(kind)] = Polynomial(std::move(c));
  }
}

std::optional<CharPoly> FingerprintCache::find(const std::string& hex, MatrixKind kind) {
  load(order_of(hex));
  auto it = table_.find(hex);
  if (it != table_.end()) {
    auto jt = it->second.find(kind);
    if (jt != it->second.end()) {
      ++hits_;
      return jt->second;
    }
  }
  ++misses_;
  return std::nullopt;
}

void FingerprintCache::insert(const std::string& hex, MatrixKind kind, const CharPoly& p) {
  auto& slot = table_[hex];
  if (slot.count(kind)) return;
  slot[kind] = p;
  pending_.push_back(serialize(hex, kind, p));
}

void FingerprintCache::flush() {
  std::map<int, std::vector<const std::string*>> by_n;
  for (const auto& line : pending_) by_n[order_of(line.substr(0, line.find('\t')))].push_back(&line);
  for (const auto& [n, lines] : by_n) {
    const auto path = file_for(n);
    bool torn = false;
    if (std::ifstream tail(path, std::ios::binary | std::ios::ate); tail && tail.tellg() > 0) {
      tail.seekg(-1, std::ios::end);
      torn = tail.get() != '\n';
    }
    std::ofstream out(path, std::ios::app | std::ios::binary);
    if (!out) throw IoError("cannot write cache file " + path.string());
    if (torn) out << '\n';
    for (const auto* l : lines) out << *l << '\n';
  }
  pending_.clear();
}

}  // namespace specdet
