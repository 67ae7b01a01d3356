#pragma once

// Slow, independent reference computations used only by the tests. Nothing
// here shares code with the library's solvers.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "sroman/graph.hpp"

namespace oracle {

using sroman::Edge;
using sroman::Graph;
using sroman::Vertex;

inline std::vector<std::vector<bool>> adjacency(const Graph& g) {
  std::vector<std::vector<bool>> adj(g.order(), std::vector<bool>(g.order(), false));
  for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = true;
  return adj;
}

/// Every labelling V -> {0,1,2}, in base-3 counting order.
template <typename F>
void for_each_labelling(std::size_t n, F&& visit) {
  std::vector<int> f(n, 0);
  while (true) {
    visit(f);
    std::size_t i = 0;
    while (i < n && f[i] == 2) f[i++] = 0;
    if (i == n) return;
    ++f[i];
  }
}

inline bool roman_dominating(const std::vector<std::vector<bool>>& adj, const std::vector<int>& f) {
  const std::size_t n = f.size();
  for (std::size_t v = 0; v < n; ++v) {
    if (f[v] != 0) continue;
    bool ok = false;
    for (std::size_t u = 0; u < n && !ok; ++u) ok = adj[v][u] && f[u] == 2;
    if (!ok) return false;
  }
  return true;
}

/// gamma_R by enumerating all 3^n labellings.
inline std::size_t gamma_r(const Graph& g) {
  auto adj = adjacency(g);
  std::size_t best = 2 * g.order() + 1;
  for_each_labelling(g.order(), [&](const std::vector<int>& f) {
    const auto w = static_cast<std::size_t>(std::accumulate(f.begin(), f.end(), 0));
    if (w < best && roman_dominating(adj, f)) best = w;
  });
  return g.order() == 0 ? 0 : best;
}

/// All minimum-weight Roman dominating functions.
inline std::vector<std::vector<int>> all_gamma_r_functions(const Graph& g) {
  auto adj = adjacency(g);
  const std::size_t best = gamma_r(g);
  std::vector<std::vector<int>> out;
  for_each_labelling(g.order(), [&](const std::vector<int>& f) {
    if (static_cast<std::size_t>(std::accumulate(f.begin(), f.end(), 0)) == best && roman_dominating(adj, f))
      out.push_back(f);
  });
  return out;
}

/// gamma by checking subsets in order of size.
inline std::size_t gamma(const Graph& g) {
  const std::size_t n = g.order();
  auto adj = adjacency(g);
  std::size_t best = n;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (size >= best) continue;
    bool dominating = true;
    for (std::size_t v = 0; v < n && dominating; ++v) {
      bool hit = (mask >> v) & 1U;
      for (std::size_t u = 0; u < n && !hit; ++u) hit = adj[v][u] && ((mask >> u) & 1U);
      dominating = hit;
    }
    if (dominating) best = size;
  }
  return best;
}

/// BFS-free reachability via repeated relaxation (Floyd-Warshall on hop counts).
inline std::vector<std::vector<std::size_t>> all_distances(const Graph& g) {
  const std::size_t n = g.order();
  const std::size_t inf = n + 1;
  std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, inf));
  for (std::size_t v = 0; v < n; ++v) d[v][v] = 0;
  for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

inline bool connected(const Graph& g) {
  auto d = all_distances(g);
  for (std::size_t v = 0; v < g.order(); ++v)
    if (d[0][v] > g.order()) return false;
  return true;
}

/// Smallest edge-mask over all vertex permutations; equal for isomorphic graphs.
inline std::uint64_t canonical_mask(std::size_t n, const std::vector<Edge>& pairs, std::uint64_t mask) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> index(n, std::vector<int>(n, -1));
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    index[pairs[i].first][pairs[i].second] = static_cast<int>(i);
    index[pairs[i].second][pairs[i].first] = static_cast<int>(i);
  }
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t image = 0;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if ((mask >> i) & 1U) image |= std::uint64_t{1} << index[perm[pairs[i].first]][perm[pairs[i].second]];
    best = std::min(best, image);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// One representative of every isomorphism class of connected graphs on n vertices.
inline std::vector<Graph> connected_graphs(std::size_t n) {
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::set<std::uint64_t> seen;
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if ((mask >> i) & 1U) edges.push_back(pairs[i]);
    Graph g = Graph::from_edge_list(n, edges);
    if (n > 1 && !connected(g)) continue;
    if (!seen.insert(canonical_mask(n, pairs, mask)).second) continue;
    out.push_back(std::move(g));
  }
  return out;
}

/// Edges of S(G,t) straight from the recursive description: n copies of
/// S(G,t-1) prefixed by each letter, joined by x y^{t-1} ~ y x^{t-1}.
inline std::set<std::pair<std::vector<Vertex>, std::vector<Vertex>>> recursive_edges(const Graph& base, std::size_t t) {
  using Word = std::vector<Vertex>;
  std::set<std::pair<Word, Word>> edges;
  auto add = [&](Word a, Word b) {
    if (b < a) std::swap(a, b);
    edges.insert({a, b});
  };
  if (t == 1) {
    for (auto [u, v] : base.edges()) add({u}, {v});
    return edges;
  }
  auto inner = recursive_edges(base, t - 1);
  for (Vertex x = 0; x < base.order(); ++x) {
    for (const auto& [a, b] : inner) {
      Word pa{x}, pb{x};
      pa.insert(pa.end(), a.begin(), a.end());
      pb.insert(pb.end(), b.begin(), b.end());
      add(pa, pb);
    }
  }
  for (auto [x, y] : base.edges()) {
    Word a(t, y), b(t, x);
    a[0] = x;
    b[0] = y;
    add(a, b);
  }
  return edges;
}

}  // namespace oracle
