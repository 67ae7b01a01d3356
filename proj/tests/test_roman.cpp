#include "doctest.h"
#include "oracles.hpp"
#include "sroman/errors.hpp"
#include "sroman/generators.hpp"
#include "sroman/roman.hpp"
#include "sroman/solver.hpp"

using namespace sroman;

namespace {

RomanFunction labels(std::vector<std::uint8_t> v) { return RomanFunction(std::move(v)); }

}  // namespace

TEST_CASE("is_roman_dominating") {
  auto p3 = path_graph(3);
  CHECK(is_roman_dominating(labels({1, 1, 1}), p3));
  CHECK(is_roman_dominating(labels({0, 2, 0}), p3));
  CHECK(weight(labels({0, 2, 0})) == 2);
  CHECK_FALSE(is_roman_dominating(labels({0, 1, 0}), p3));
  CHECK_THROWS_AS(is_roman_dominating(labels({0, 2}), p3), InputError);
  CHECK_THROWS_AS(labels({3}), InputError);
}

TEST_CASE("weight and partition") {
  CHECK(weight(labels({0, 0, 0})) == 0);
  CHECK(weight(labels({2, 2, 2, 2})) == 8);
  auto f = labels({0, 2, 0, 1});
  CHECK(weight(f) == 3);
  CHECK(is_roman_dominating(f, path_graph(4)));
  CHECK(f.b0() == VertexSet{0, 2});
  CHECK(f.b1() == VertexSet{3});
  CHECK(f.b2() == VertexSet{1});
  CHECK(weight(f) == f.count(1) + 2 * f.count(2));
  CHECK(RomanFunction::from_sets(4, VertexSet{3}, VertexSet{1}) == f);
  CHECK_THROWS_AS(RomanFunction::from_sets(4, VertexSet{1}, VertexSet{1}), InputError);
}

TEST_CASE("derived sets on the documented examples") {
  auto d = derived_sets(labels({0, 2, 0}), path_graph(3));
  CHECK(d.d1.empty());
  CHECK(d.d2.empty());
  CHECK(d.d12.empty());
  CHECK(d.theta == 0);
  CHECK(d.b2_prime.empty());

  d = derived_sets(labels({1, 1}), path_graph(2));
  CHECK(d.d1 == VertexSet{0, 1});
  CHECK(d.d2.empty());
  CHECK(d.d12 == VertexSet{0, 1});
  CHECK(d.theta == 0);

  d = derived_sets(labels({0, 2, 0, 0, 2, 0, 1}), path_graph(7));
  CHECK(d.d1.empty());
  CHECK(d.d2.empty());
  CHECK(d.d12.empty());
  CHECK(d.theta == 1);
  CHECK(d.theta_vertices == VertexSet{6});
  CHECK(d.b2_prime == VertexSet{4});

  CHECK_THROWS_AS(derived_sets(labels({0, 1, 0}), path_graph(3)), ContractError);
}

TEST_CASE("derived sets agree with the definitions on every optimal function of small graphs") {
  for (std::size_t n = 2; n <= 5; ++n) {
    for (const auto& g : oracle::connected_graphs(n)) {
      auto dist = oracle::all_distances(g);
      for (const auto& raw : oracle::all_gamma_r_functions(g)) {
        std::vector<std::uint8_t> v(raw.begin(), raw.end());
        auto f = labels(v);
        auto d = derived_sets(f, g);
        // Non-isolated in <B_i>, recomputed from the distance matrix.
        auto non_isolated = [&](auto member) {
          VertexSet out;
          for (Vertex x = 0; x < n; ++x) {
            if (!member(x)) continue;
            for (Vertex y = 0; y < n; ++y)
              if (dist[x][y] == 1 && member(y)) {
                out.push_back(x);
                break;
              }
          }
          return out;
        };
        CHECK(d.d1 == non_isolated([&](Vertex x) { return f[x] == 1; }));
        CHECK(d.d2 == non_isolated([&](Vertex x) { return f[x] == 2; }));
        CHECK(d.d12 == non_isolated([&](Vertex x) { return f[x] != 0; }));
        std::size_t theta = 0;
        for (Vertex u = 0; u < n; ++u) {
          if (f[u] != 1 || std::binary_search(d.d1.begin(), d.d1.end(), u)) continue;
          bool hit = false;
          for (Vertex x = 0; x < n; ++x) {
            if (f[x] != 2 || dist[u][x] != 2) continue;
            std::size_t zeros = 0;
            for (Vertex y = 0; y < n; ++y) zeros += dist[x][y] == 1 && f[y] == 0;
            hit = hit || zeros == 2;
          }
          theta += hit;
        }
        CHECK(d.theta == theta);
        // gamma_R-functions: <B1> has maximum degree one and no B1-B2 edge.
        for (auto [a, b] : g.edges()) CHECK_FALSE(f[a] + f[b] == 3);
        CHECK(d.d1.size() % 2 == 0);
      }
    }
  }
}

TEST_CASE("copy profiles on solver-optimal functions of S(P_n,t)") {
  for (std::size_t n = 3; n <= 6; ++n) {
    for (std::size_t t = 2; t <= (n <= 4 ? 3u : 2u); ++t) {
      auto s = SierpinskiGraph::build(path_graph(n), t);
      auto f = gamma_r_exact(s.graph()).function;
      auto profiles = copy_weight_profile(f, s);
      REQUIRE(profiles.size() == s.copy_count());
      std::size_t total = 0;
      for (const auto& p : profiles) {
        CHECK(p.class_index >= 0);
        if (!p.in_lambda) CHECK(p.class_index >= 1);
        CHECK(p.a_size + p.b_size + 3 - (p.u == 0) - (p.u + 1 == n) == n);
        total += p.weight;
      }
      CHECK(total == f.weight());
      CHECK(unpaired_d0_copies(profiles, s).empty());
    }
  }
}

TEST_CASE("copy profile bookkeeping") {
  auto s = SierpinskiGraph::build(path_graph(4), 2);
  auto f = gamma_r_exact(s.graph()).function;
  auto profiles = copy_weight_profile(f, s);
  CHECK(profiles[0].a_size == 0);
  CHECK(profiles[0].b_size == 2);
  CHECK(profiles[3].a_size == 2);
  CHECK(profiles[3].b_size == 0);
  // At t = 2 every wuu is an extreme vertex, so no copy is in Lambda.
  for (const auto& p : profiles) CHECK_FALSE(p.in_lambda);
  auto s3 = SierpinskiGraph::build(path_graph(3), 3);
  auto p3 = copy_weight_profile(gamma_r_exact(s3.graph()).function, s3);
  CHECK(std::any_of(p3.begin(), p3.end(), [](const CopyProfile& p) { return p.in_lambda; }));

  CHECK_THROWS_AS(copy_weight_profile(f, SierpinskiGraph::build(cycle_graph(4), 2)), InputError);
  CHECK_THROWS_AS(copy_weight_profile(RomanFunction(std::vector<std::uint8_t>(16, 0)), s), ContractError);
}
