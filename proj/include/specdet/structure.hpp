#pragma once

#include <optional>
#include <vector>

#include "specdet/graph.hpp"

namespace specdet {

struct StructureReport {
  std::vector<int> degrees;
  bool regular = false;
  std::optional<int> degree;        // set when regular
  std::vector<int> component_of;    // component index per vertex, numbered by first vertex
  int components = 0;
  int isolated = 0;
  std::optional<std::vector<int>> bipartition;  // side 0/1 per vertex when bipartite
  int bipartite_components = 0;     // components (isolated vertices included) that are bipartite
  std::optional<int> girth;         // absent for forests
  std::optional<int> diameter;      // absent when disconnected
  long long triangles = 0;
  std::size_t edges = 0;
};

StructureReport structure_report(const Graph& g);

bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);
long long triangle_count(const Graph& g);
std::vector<int> bfs_distances(const Graph& g, int source);  // -1 when unreachable

}  // namespace specdet
