#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "p3pack/graph.hpp"

namespace p3pack {

/// graph6 ASCII encoding (vertices are taken in ascending label order and
/// renumbered 0..n-1 for the encoding, so only label-dense graphs round-trip
/// with identical labels). Supports orders up to 258047.
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& line);

/// Plain edge-list text format: first line "n m", then m lines "u v"
/// (0-based labels), whitespace-separated, LF-terminated.
std::string to_edge_list(const Graph& g);
Graph from_edge_list(const std::string& text);
Graph from_edge_list(std::istream& in);

/// Reads a whole stream of graph6 lines (optional ">>graph6<<" header,
/// blank lines skipped).
std::vector<Graph> read_graph6_stream(std::istream& in);

}  // namespace p3pack
