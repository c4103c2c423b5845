#pragma once

#include <functional>
#include <vector>

#include "specdet/graph.hpp"

namespace specdet {

struct EnumerationOptions {
  bool allow_n10 = false;  // n = 10 runs for hours; refuse unless asked
  int jobs = 1;
};

using GraphVisitor = std::function<void(const Graph&)>;
using GraphPredicate = std::function<bool(const Graph&)>;

// One canonical representative per isomorphism class on n vertices.
void enumerate_graphs(int n, const GraphVisitor& visit, const EnumerationOptions& options = {},
                      const GraphPredicate& predicate = {});
std::vector<Graph> all_graphs(int n, const EnumerationOptions& options = {},
                              const GraphPredicate& predicate = {});

// All d-regular graphs on n vertices up to isomorphism (disconnected ones included
// unless connected_only).
void enumerate_regular(int n, int d, const GraphVisitor& visit, bool connected_only = false);
std::vector<Graph> all_regular(int n, int d, bool connected_only = false);

// Number of graphs on n vertices up to isomorphism, n = 0..10.
long long known_graph_count(int n);

}  // namespace specdet
