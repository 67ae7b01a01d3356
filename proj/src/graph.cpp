#include "sroman/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_set>

#include "sroman/errors.hpp"

namespace sroman {

Graph Graph::from_edge_list(std::size_t n, std::span<const Edge> edges,
                            std::vector<std::string> labels) {
  if (n == 0) throw InputError("graph order must be positive");
  if (!labels.empty() && labels.size() != n) {
    throw InputError("expected " + std::to_string(n) + " labels, got " +
                     std::to_string(labels.size()));
  }
  Graph g;
  g.labels_ = std::move(labels);

  std::vector<std::vector<Vertex>> lists(n);
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges.size() * 2);
  g.edges_.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      std::ostringstream msg;
      msg << "edge (" << u << "," << v << ") has an endpoint outside 0.." << n - 1;
      throw InputError(msg.str());
    }
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    auto key = (static_cast<std::uint64_t>(std::min(u, v)) << 32) | std::max(u, v);
    if (!seen.insert(key).second) continue;
    g.edges_.emplace_back(u, v);
    lists[u].push_back(v);
    lists[v].push_back(u);
  }

  g.offsets_.resize(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + lists[v].size();
  g.adjacency_.reserve(g.offsets_[n]);
  for (auto& list : lists) {
    std::sort(list.begin(), list.end());
    g.adjacency_.insert(g.adjacency_.end(), list.begin(), list.end());
  }
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::string Graph::label(Vertex v) const {
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

void Graph::check_vertex(Vertex v) const {
  if (v >= order()) {
    throw InputError("vertex " + std::to_string(v) + " outside 0.." + std::to_string(order() - 1));
  }
}

bool operator==(const Graph& a, const Graph& b) {
  return a.offsets_ == b.offsets_ && a.adjacency_ == b.adjacency_;
}

VertexSet neighborhood(const Graph& g, Vertex v, bool closed) {
  g.check_vertex(v);
  auto nb = g.neighbors(v);
  VertexSet out(nb.begin(), nb.end());
  if (closed) out.insert(std::lower_bound(out.begin(), out.end(), v), v);
  return out;
}

VertexSet closed_neighborhood(const Graph& g, std::span<const Vertex> set) {
  std::vector<char> mark(g.order(), 0);
  for (Vertex v : set) {
    g.check_vertex(v);
    mark[v] = 1;
    for (Vertex u : g.neighbors(v)) mark[u] = 1;
  }
  VertexSet out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (mark[v]) out.push_back(v);
  return out;
}

std::vector<std::optional<std::size_t>> distances_from(const Graph& g, Vertex source) {
  g.check_vertex(source);
  std::vector<std::optional<std::size_t>> dist(g.order());
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex u : g.neighbors(v)) {
      if (dist[u]) continue;
      dist[u] = *dist[v] + 1;
      queue.push_back(u);
    }
  }
  return dist;
}

std::optional<std::size_t> distance(const Graph& g, Vertex u, Vertex v) {
  g.check_vertex(v);
  return distances_from(g, u)[v];
}

bool is_dominating_set(const Graph& g, std::span<const Vertex> set) {
  return closed_neighborhood(g, set).size() == g.order();
}

bool is_spanning_subgraph(const Graph& h, const Graph& g) {
  if (h.order() != g.order()) return false;
  return std::all_of(h.edges().begin(), h.edges().end(),
                     [&](const Edge& e) { return g.adjacent(e.first, e.second); });
}

VertexSet universal_vertices(const Graph& g) {
  VertexSet out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) + 1 == g.order()) out.push_back(v);
  return out;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  auto dist = distances_from(g, 0);
  return std::all_of(dist.begin(), dist.end(), [](const auto& d) { return d.has_value(); });
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<std::int64_t> position(g.order(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    g.check_vertex(vertices[i]);
    position[vertices[i]] = static_cast<std::int64_t>(i);
  }
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (g.has_labels()) labels.push_back(g.label(vertices[i]));
    for (Vertex u : g.neighbors(vertices[i])) {
      auto j = position[u];
      if (j > static_cast<std::int64_t>(i)) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return Graph::from_edge_list(vertices.size(), edges, std::move(labels));
}

Graph remove_edge(const Graph& g, std::size_t edge_index) {
  if (edge_index >= g.size()) throw InputError("edge index out of range");
  std::vector<Edge> edges = g.edges();
  edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(edge_index));
  return Graph::from_edge_list(g.order(), edges, g.labels());
}

bool is_canonical_path(const Graph& g) {
  if (g.size() + 1 != g.order()) return false;
  for (Vertex v = 0; v + 1 < g.order(); ++v)
    if (!g.adjacent(v, v + 1)) return false;
  return true;
}

}  // namespace sroman
