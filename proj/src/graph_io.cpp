#include "specdet/graph_io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "specdet/error.hpp"

namespace specdet {

namespace {

void put_size(std::string& out, long long n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
}

}  // namespace

std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  put_size(out, n);
  int acc = 0, filled = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = filled = 0;
      }
    }
  if (filled) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph parse_graph6(std::string_view line) {
  if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.empty()) throw ParseError("graph6: empty input");
  for (char c : line)
    if (c < 63 || c > 126) throw ParseError("graph6: byte outside 63..126");

  std::size_t pos = 0;
  long long n = 0;
  auto take = [&](int count) {
    if (pos + count > line.size()) throw ParseError("graph6: truncated size header");
    long long v = 0;
    for (int i = 0; i < count; ++i) v = (v << 6) | (line[pos++] - 63);
    return v;
  };
  if (line[0] != '~') {
    n = take(1);
  } else if (line.size() > 1 && line[1] == '~') {
    pos = 2;
    n = take(6);
    if (n <= 258047) throw ParseError("graph6: non-minimal size header");
  } else {
    pos = 1;
    n = take(3);
    if (n <= 62) throw ParseError("graph6: non-minimal size header");
  }
  if (n > (1 << 20)) throw ParseError("graph6: graph too large");

  const long long bits = n * (n - 1) / 2;
  const long long bytes = (bits + 5) / 6;
  if (static_cast<long long>(line.size() - pos) != bytes)
    throw ParseError("graph6: expected " + std::to_string(bytes) + " data bytes, found " +
                     std::to_string(line.size() - pos));
  Graph g(static_cast<int>(n));
  long long k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = line[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  if (bits % 6) {
    const int last = line.back() - 63;
    if (last & ((1 << (6 - bits % 6)) - 1)) throw ParseError("graph6: trailing bits nonzero");
  }
  return g;
}

std::string to_edge_list_json(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.order();
  j["edges"] = nlohmann::json::array();
  for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
  return j.dump();
}

Graph parse_edge_list_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("edge list: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer() || !j.contains("edges") ||
      !j["edges"].is_array())
    throw ParseError("edge list: expected {\"n\": int, \"edges\": [[u,v],...]}");
  std::vector<Edge> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw ParseError("edge list: each edge must be a pair of integers");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return build_graph(j["n"].get<int>(), edges);
}

std::string to_dot(const Graph& g, std::string_view name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (int v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line == ">>graph6<<") continue;
    out.push_back(parse_graph6(line));
  }
  return out;
}

std::vector<Graph> read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  if (path.size() >= 5 && path.ends_with(".json")) {
    std::stringstream buf;
    buf << in.rdbuf();
    return {parse_edge_list_json(buf.str())};
  }
  return read_graph6_stream(in);
}

}  // namespace specdet
