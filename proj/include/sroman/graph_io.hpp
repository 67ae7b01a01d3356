#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "sroman/graph.hpp"

namespace sroman {

/// Edge-list text: a header line `n m`, then m lines `u v` (0-based).
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::filesystem::path& path);
void write_edge_list(std::ostream& out, const Graph& g);
std::string to_edge_list(const Graph& g);

struct DotOptions {
  std::string name = "G";
  // Per-vertex Roman label (0/1/2) rendered as a fill colour; empty for none.
  std::vector<int> roman_labels;
};

/// Undirected DOT with one node statement per vertex (carrying its display
/// label) followed by the edges in edge-list order.
void write_dot(std::ostream& out, const Graph& g, const DotOptions& options = {});
std::string to_dot(const Graph& g, const DotOptions& options = {});

/// Reads back the DOT dialect produced by write_dot.
Graph read_dot(std::istream& in);

/// FNV-1a over the canonical edge-list text, as 16 hex digits.
std::string graph_hash(const Graph& g);

}  // namespace sroman
