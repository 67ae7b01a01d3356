#include "sroman/roman.hpp"

#include <algorithm>

#include "sroman/errors.hpp"

namespace sroman {

namespace {

long long ceil_two_thirds(std::size_t k) { return static_cast<long long>((2 * k + 2) / 3); }

// Members of `members` (given as a mask) that have a neighbour in the mask.
VertexSet non_isolated(const Graph& g, const std::vector<char>& mask) {
  VertexSet out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!mask[v]) continue;
    auto nb = g.neighbors(v);
    if (std::any_of(nb.begin(), nb.end(), [&](Vertex u) { return mask[u] != 0; })) out.push_back(v);
  }
  return out;
}

}  // namespace

RomanFunction::RomanFunction(std::vector<std::uint8_t> labels) : labels_(std::move(labels)) {
  for (auto x : labels_)
    if (x > 2) throw InputError("Roman labels must be 0, 1 or 2");
}

RomanFunction RomanFunction::from_sets(std::size_t order, std::span<const Vertex> ones,
                                       std::span<const Vertex> twos) {
  std::vector<std::uint8_t> labels(order, 0);
  auto assign = [&](std::span<const Vertex> set, std::uint8_t value) {
    for (Vertex v : set) {
      if (v >= order) throw InputError("vertex " + std::to_string(v) + " out of range");
      if (labels[v] != 0) throw InputError("vertex " + std::to_string(v) + " labelled twice");
      labels[v] = value;
    }
  };
  assign(ones, 1);
  assign(twos, 2);
  return RomanFunction(std::move(labels));
}

VertexSet RomanFunction::preimage(int label) const {
  VertexSet out;
  for (Vertex v = 0; v < labels_.size(); ++v)
    if (labels_[v] == label) out.push_back(v);
  return out;
}

std::size_t RomanFunction::count(int label) const {
  return static_cast<std::size_t>(std::count(labels_.begin(), labels_.end(), label));
}

std::size_t RomanFunction::weight() const {
  std::size_t total = 0;
  for (auto x : labels_) total += x;
  return total;
}

std::size_t weight(const RomanFunction& f) { return f.weight(); }

bool is_roman_dominating(const RomanFunction& f, const Graph& g) {
  if (f.order() != g.order()) {
    throw InputError("Roman function has " + std::to_string(f.order()) + " labels but the graph has " +
                     std::to_string(g.order()) + " vertices");
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (f[v] != 0) continue;
    auto nb = g.neighbors(v);
    if (std::none_of(nb.begin(), nb.end(), [&](Vertex u) { return f[u] == 2; })) return false;
  }
  return true;
}

DerivedSets derived_sets(const RomanFunction& f, const Graph& g) {
  if (!is_roman_dominating(f, g)) throw ContractError("derived sets need a Roman dominating function");
  const std::size_t n = g.order();
  std::vector<char> in_b1(n), in_b2(n), in_b12(n);
  for (Vertex v = 0; v < n; ++v) {
    in_b1[v] = f[v] == 1;
    in_b2[v] = f[v] == 2;
    in_b12[v] = f[v] != 0;
  }

  DerivedSets out;
  out.d1 = non_isolated(g, in_b1);
  out.d2 = non_isolated(g, in_b2);
  out.d12 = non_isolated(g, in_b12);

  // B2 vertices with exactly two 0-labelled neighbours.
  std::vector<char> two_zero_neighbours(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    if (!in_b2[v]) continue;
    auto nb = g.neighbors(v);
    two_zero_neighbours[v] = std::count_if(nb.begin(), nb.end(), [&](Vertex u) { return f[u] == 0; }) == 2;
  }

  std::vector<char> isolated_one(n, 0);
  for (Vertex v = 0; v < n; ++v) isolated_one[v] = in_b1[v] && !std::binary_search(out.d1.begin(), out.d1.end(), v);

  std::vector<char> in_b2_prime(n, 0);
  for (Vertex u = 0; u < n; ++u) {
    if (!isolated_one[u]) continue;
    auto dist = distances_from(g, u);
    bool counted = false;
    for (Vertex v = 0; v < n; ++v) {
      if (two_zero_neighbours[v] && dist[v] == 2) {
        in_b2_prime[v] = 1;
        counted = true;
      }
    }
    if (counted) out.theta_vertices.push_back(u);
  }
  out.theta = out.theta_vertices.size();
  for (Vertex v = 0; v < n; ++v)
    if (in_b2_prime[v]) out.b2_prime.push_back(v);
  return out;
}

std::vector<CopyProfile> copy_weight_profile(const RomanFunction& f, const SierpinskiGraph& s) {
  const auto& base = s.base();
  const std::size_t n = base.order();
  if (n < 3 || !is_canonical_path(base))
    throw InputError("copy profiles need the base path 0-1-...-(n-1) with n >= 3");
  if (s.depth() < 2) throw InputError("copy profiles need t >= 2");
  if (!is_roman_dominating(f, s.graph())) throw ContractError("copy profiles need a Roman dominating function");

  std::vector<CopyProfile> out;
  out.reserve(s.copy_count());
  for (std::size_t copy = 0; copy < s.copy_count(); ++copy) {
    CopyProfile p;
    p.copy = copy;
    p.u = static_cast<Vertex>(copy % n);
    p.a_size = p.u >= 1 ? p.u - 1 : 0;
    p.b_size = p.u + 2 <= n ? n - 2 - p.u : 0;
    for (Vertex v : s.copy_vertices(copy)) p.weight += static_cast<std::size_t>(f[v]);
    p.class_index = static_cast<long long>(p.weight) - ceil_two_thirds(p.a_size) - ceil_two_thirds(p.b_size);
    p.in_lambda = s.graph().degree(s.copy_extreme_vertex(copy)) != base.degree(p.u);
    out.push_back(p);
  }
  return out;
}

std::vector<std::size_t> unpaired_d0_copies(const std::vector<CopyProfile>& profiles,
                                            const SierpinskiGraph& s) {
  std::vector<std::size_t> out;
  for (const auto& p : profiles) {
    if (p.weight_class() != 0) continue;
    bool paired = std::any_of(profiles.begin(), profiles.end(), [&](const CopyProfile& q) {
      return q.weight_class() == 2 && s.base().adjacent(p.u, q.u);
    });
    if (!paired) out.push_back(p.copy);
  }
  return out;
}

}  // namespace sroman
