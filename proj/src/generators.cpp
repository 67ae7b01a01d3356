#include "sroman/generators.hpp"

#include <algorithm>
#include <queue>

#include "sroman/errors.hpp"

namespace sroman {

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edge_list(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw InputError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return Graph::from_edge_list(n, edges);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edge_list(n, edges);
}

Graph star_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(0, v);
  return Graph::from_edge_list(n, edges);
}

Graph random_connected_graph(std::size_t n, double extra_edge_probability, std::mt19937_64& rng) {
  if (n == 0) throw InputError("graph order must be positive");
  std::vector<Edge> edges;
  if (n == 2) edges.emplace_back(0, 1);
  if (n > 2) {
    std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
    std::vector<Vertex> prufer(n - 2);
    for (auto& x : prufer) x = pick(rng);
    std::vector<std::size_t> degree(n, 1);
    for (Vertex x : prufer) ++degree[x];
    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
    for (Vertex v = 0; v < n; ++v)
      if (degree[v] == 1) leaves.push(v);
    for (Vertex x : prufer) {
      Vertex leaf = leaves.top();
      leaves.pop();
      edges.emplace_back(std::min(leaf, x), std::max(leaf, x));
      if (--degree[x] == 1) leaves.push(x);
    }
    Vertex a = leaves.top();
    leaves.pop();
    Vertex b = leaves.top();
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::bernoulli_distribution extra(extra_edge_probability);
  std::vector<std::vector<char>> present(n, std::vector<char>(n, 0));
  for (const auto& [u, v] : edges) present[u][v] = present[v][u] = 1;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!present[u][v] && extra(rng)) edges.emplace_back(u, v);
  std::sort(edges.begin(), edges.end());
  return Graph::from_edge_list(n, edges);
}

}  // namespace sroman
