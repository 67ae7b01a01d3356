#include <random>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "sroman/errors.hpp"
#include "sroman/generators.hpp"
#include "sroman/graph.hpp"
#include "sroman/graph_io.hpp"

using namespace sroman;

TEST_CASE("from_edge_list builds the small named graphs") {
  std::vector<Edge> k2{{0, 1}};
  auto g = Graph::from_edge_list(2, k2);
  CHECK(g.order() == 2);
  CHECK(g.size() == 1);
  CHECK(g.adjacent(1, 0));

  CHECK(Graph::from_edge_list(5, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}}) == path_graph(5));
  auto k3 = Graph::from_edge_list(3, std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}});
  CHECK(k3 == complete_graph(3));
  CHECK(k3 == cycle_graph(3));
}

TEST_CASE("from_edge_list rejects bad input and drops duplicates") {
  CHECK_THROWS_AS(Graph::from_edge_list(2, std::vector<Edge>{{0, 2}}), InputError);
  CHECK_THROWS_AS(Graph::from_edge_list(2, std::vector<Edge>{{1, 1}}), InputError);
  CHECK_THROWS_AS(Graph::from_edge_list(0, std::vector<Edge>{}), InputError);
  auto g = Graph::from_edge_list(3, std::vector<Edge>{{0, 1}, {1, 0}, {0, 1}, {1, 2}});
  CHECK(g.size() == 2);
}

TEST_CASE("neighborhoods") {
  CHECK(neighborhood(path_graph(3), 1, false) == VertexSet{0, 2});
  CHECK(neighborhood(complete_graph(4), 2, true) == VertexSet{0, 1, 2, 3});
  CHECK(neighborhood(cycle_graph(5), 0, false) == VertexSet{1, 4});
  CHECK_THROWS_AS(neighborhood(path_graph(3), 3, true), InputError);
}

TEST_CASE("distance") {
  CHECK(distance(cycle_graph(7), 3, 3) == std::optional<std::size_t>{0});
  CHECK(distance(path_graph(5), 0, 4) == std::optional<std::size_t>{4});
  CHECK(distance(cycle_graph(6), 0, 3) == std::optional<std::size_t>{3});
  auto split = Graph::from_edge_list(4, std::vector<Edge>{{0, 1}, {2, 3}});
  CHECK_FALSE(distance(split, 0, 3).has_value());
}

TEST_CASE("distance agrees with the hop-count oracle, is symmetric and obeys the triangle inequality") {
  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 40; ++rep) {
    const std::size_t n = 2 + rep % 7;
    auto g = random_connected_graph(n, 0.25, rng);
    auto d = oracle::all_distances(g);
    for (Vertex u = 0; u < n; ++u) {
      auto row = distances_from(g, u);
      for (Vertex v = 0; v < n; ++v) {
        REQUIRE(row[v].has_value());
        CHECK(*row[v] == d[u][v]);
        CHECK(distance(g, u, v) == distance(g, v, u));
        for (Vertex w = 0; w < n; ++w) CHECK(*distance(g, u, w) <= *distance(g, u, v) + *distance(g, v, w));
      }
    }
  }
}

TEST_CASE("is_dominating_set") {
  CHECK(is_dominating_set(complete_graph(5), VertexSet{3}));
  CHECK(is_dominating_set(path_graph(5), VertexSet{1, 3}));
  CHECK_FALSE(is_dominating_set(path_graph(5), VertexSet{0}));
  auto g = cycle_graph(6);
  CHECK(is_dominating_set(g, VertexSet{0, 1, 2, 3, 4, 5}));
  CHECK_FALSE(is_dominating_set(g, VertexSet{}));
}

TEST_CASE("is_spanning_subgraph") {
  CHECK(is_spanning_subgraph(path_graph(5), cycle_graph(5)));
  CHECK(is_spanning_subgraph(cycle_graph(5), cycle_graph(5)));
  CHECK_FALSE(is_spanning_subgraph(cycle_graph(5), path_graph(5)));
  CHECK_FALSE(is_spanning_subgraph(path_graph(4), cycle_graph(5)));
}

TEST_CASE("universal_vertices") {
  CHECK(universal_vertices(star_graph(4)) == VertexSet{0});
  CHECK(universal_vertices(complete_graph(4)) == VertexSet{0, 1, 2, 3});
  CHECK(universal_vertices(path_graph(4)).empty());
}

TEST_CASE("degree sum is twice the edge count") {
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 30; ++rep) {
    auto g = random_connected_graph(1 + rep % 9, 0.4, rng);
    std::size_t total = 0;
    for (Vertex v = 0; v < g.order(); ++v) total += g.degree(v);
    CHECK(total == 2 * g.size());
    CHECK(is_connected(g));
    for (auto [u, v] : g.edges()) {
      CHECK(g.adjacent(u, v));
      CHECK(g.adjacent(v, u));
    }
  }
}

TEST_CASE("remove_edge and induced_subgraph") {
  auto c = cycle_graph(5);
  auto p = remove_edge(c, 4);
  CHECK(p.order() == 5);
  CHECK(p.size() == 4);
  CHECK(is_spanning_subgraph(p, c));
  auto sub = induced_subgraph(c, VertexSet{0, 1, 2});
  CHECK(sub == path_graph(3));
}

TEST_CASE("edge-list text round-trips byte for byte") {
  const std::string text = "5 4\n0 1\n3 2\n1 2\n4 0\n";
  std::istringstream in(text);
  auto g = read_edge_list(in);
  CHECK(to_edge_list(g) == text);
  std::istringstream bad("3 1\n0 5\n");
  CHECK_THROWS_AS(read_edge_list(bad), InputError);
  std::istringstream short_input("3 2\n0 1\n");
  CHECK_THROWS_AS(read_edge_list(short_input), InputError);
}

TEST_CASE("DOT export round-trips") {
  std::mt19937_64 rng(11);
  auto g = random_connected_graph(6, 0.3, rng);
  const std::string dot = to_dot(g);
  std::istringstream in(dot);
  auto back = read_dot(in);
  CHECK(back == g);
  CHECK(to_dot(back) == dot);
  CHECK(dot.rfind("graph G {", 0) == 0);
}

TEST_CASE("graph_hash depends on the edge list") {
  CHECK(graph_hash(path_graph(4)) == graph_hash(path_graph(4)));
  CHECK(graph_hash(path_graph(4)) != graph_hash(cycle_graph(4)));
  CHECK(graph_hash(path_graph(4)).size() == 16);
}
