#pragma once

#include <cstddef>
#include <random>

#include "sroman/graph.hpp"

namespace sroman {

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
/// K_{1,n-1} with centre 0.
Graph star_graph(std::size_t n);

/// Uniform random labelled spanning tree (random Prüfer sequence) plus each
/// remaining pair independently with probability `extra_edge_probability`.
Graph random_connected_graph(std::size_t n, double extra_edge_probability, std::mt19937_64& rng);

}  // namespace sroman
