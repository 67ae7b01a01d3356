#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sroman {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;
using VertexSet = std::vector<Vertex>;  // sorted, duplicate-free

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Neighbour lists are kept sorted in a CSR layout. The edge list is kept in
/// first-occurrence order with the orientation it was given in, so that
/// writing a graph back out reproduces the text it was read from.
class Graph {
 public:
  Graph() = default;

  /// Throws InputError on an out-of-range endpoint or a self-loop.
  /// Duplicate edges (in either orientation) are dropped.
  static Graph from_edge_list(std::size_t n, std::span<const Edge> edges,
                              std::vector<std::string> labels = {});

  std::size_t order() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t size() const { return edges_.size(); }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool adjacent(Vertex u, Vertex v) const;

  const std::vector<Edge>& edges() const { return edges_; }

  bool has_labels() const { return !labels_.empty(); }
  /// Display label; falls back to the decimal id.
  std::string label(Vertex v) const;
  const std::vector<std::string>& labels() const { return labels_; }

  void check_vertex(Vertex v) const;

  /// Same order and same edge set. Labels are presentation only.
  friend bool operator==(const Graph& a, const Graph& b);

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> adjacency_;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
};

VertexSet neighborhood(const Graph& g, Vertex v, bool closed);

/// Closed neighbourhood of a set.
VertexSet closed_neighborhood(const Graph& g, std::span<const Vertex> set);

/// Shortest-path length; nullopt when v is not reachable from u.
std::optional<std::size_t> distance(const Graph& g, Vertex u, Vertex v);

/// BFS layer of every vertex from `source`; nullopt for unreachable vertices.
std::vector<std::optional<std::size_t>> distances_from(const Graph& g, Vertex source);

bool is_dominating_set(const Graph& g, std::span<const Vertex> set);

/// H and G share the vertex set and E(H) ⊆ E(G).
bool is_spanning_subgraph(const Graph& h, const Graph& g);

/// Vertices of degree n-1.
VertexSet universal_vertices(const Graph& g);

bool is_connected(const Graph& g);

/// Induced subgraph on `vertices`; vertex i of the result is vertices[i].
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Removes one edge, keeping the vertex set.
Graph remove_edge(const Graph& g, std::size_t edge_index);

/// True iff g is the path 0-1-...-(n-1) with exactly those edges.
bool is_canonical_path(const Graph& g);

}  // namespace sroman
