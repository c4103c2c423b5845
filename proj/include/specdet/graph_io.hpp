#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "specdet/graph.hpp"

namespace specdet {

Graph parse_graph6(std::string_view line);
std::string emit_graph6(const Graph& g);

std::string to_edge_list_json(const Graph& g);
Graph parse_edge_list_json(std::string_view text);

std::string to_dot(const Graph& g, std::string_view name = "G");

// One graph per non-empty line; a leading ">>graph6<<" header is accepted.
std::vector<Graph> read_graph6_stream(std::istream& in);
std::vector<Graph> read_graph_file(const std::string& path);  // graph6 or .json edge list

}  // namespace specdet
