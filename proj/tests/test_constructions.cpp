#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "sroman/constructions.hpp"
#include "sroman/errors.hpp"
#include "sroman/generators.hpp"

using namespace sroman;

namespace {

RomanFunction labels(std::vector<std::uint8_t> v) { return RomanFunction(std::move(v)); }

RomanFunction center_two(std::size_t n) {
  std::vector<std::uint8_t> v(n, 0);
  v[0] = 2;
  return labels(v);
}

}  // namespace

TEST_CASE("lifting a base function") {
  auto p3 = SierpinskiGraph::build(path_graph(3), 2);
  auto g = lift_base_function(labels({0, 2, 0}), p3);
  CHECK(g.weight() == 6);
  CHECK(is_roman_dominating(g, p3.graph()));

  auto k4 = SierpinskiGraph::build(complete_graph(4), 2);
  auto h = lift_base_function(center_two(4), k4);
  CHECK(h.weight() == 8);
  CHECK(is_roman_dominating(h, k4.graph()));

  CHECK_THROWS_AS(lift_base_function(labels({0, 2, 0}), SierpinskiGraph::build(path_graph(3), 1)), InputError);
  CHECK_THROWS_AS(lift_base_function(labels({0, 1, 0}), p3), ContractError);
}

TEST_CASE("theorem construction on the documented examples") {
  auto star = theorem_upper_bound_construction(star_graph(4), center_two(4), 2);
  CHECK(star.predicted_weight == 7);
  CHECK(star.valid);
  CHECK(star.actual_weight <= 7);
  CHECK(gamma_r_exact(star.graph.graph()).value == 7);

  auto p2 = theorem_upper_bound_construction(path_graph(2), labels({1, 1}), 2);
  CHECK(p2.predicted_weight == 3);
  CHECK(p2.valid);
  CHECK(p2.actual_weight <= 3);
  CHECK(oracle::gamma_r(path_graph(4)) == 3);

  auto p7 = theorem_upper_bound_construction(path_graph(7), labels({0, 2, 0, 0, 2, 0, 1}), 2);
  CHECK(p7.predicted_weight == 32);
  CHECK(p7.valid);
  CHECK(p7.actual_weight == 32);
  CHECK(std::find(p7.steps_applied.begin(), p7.steps_applied.end(), "step4") != p7.steps_applied.end());

  CHECK_THROWS_AS(theorem_upper_bound_construction(path_graph(3), labels({1, 1, 1}), 2), ContractError);
  CHECK_THROWS_AS(theorem_upper_bound_construction(path_graph(3), labels({0, 2, 0}), 1), InputError);
}

TEST_CASE("bound values") {
  CHECK(bound_value(gamma_r_exact(path_graph(3)).function, path_graph(3), 2) == 5);
  CHECK(bound_value(labels({1, 1}), path_graph(2), 3) == 6);
  CHECK(oracle::gamma_r(path_graph(8)) == 6);
  CHECK(bound_value(center_two(4), star_graph(4), 3) == 28);
}

TEST_CASE("Roman graph bound") {
  CHECK(roman_graph_bound(path_graph(3), 2) == 5);
  CHECK(roman_graph_bound(complete_graph(4), 2) == 7);
  CHECK(gamma_r_exact(SierpinskiGraph::build(complete_graph(4), 2).graph()).value <= 7);
  CHECK(roman_graph_bound(path_graph(6), 2) == 22);
  CHECK_THROWS_AS(roman_graph_bound(cycle_graph(4), 2), ContractError);
}

TEST_CASE("theorem construction is valid for every optimal function of small graphs") {
  for (std::size_t n = 2; n <= 5; ++n) {
    for (const auto& g : oracle::connected_graphs(n)) {
      auto optimal = gamma_r_exact(g);
      for (const auto& raw : oracle::all_gamma_r_functions(g)) {
        auto f = labels(std::vector<std::uint8_t>(raw.begin(), raw.end()));
        // Functions with a B1-B2 edge or a vertex of degree two in <B1> are
        // outside the construction's contract.
        bool contract = true;
        std::vector<std::size_t> ones(n, 0);
        for (auto [u, v] : g.edges()) {
          if (f[u] + f[v] == 3) contract = false;
          if (f[u] == 1 && f[v] == 1) ++ones[u], ++ones[v];
        }
        contract = contract && *std::max_element(ones.begin(), ones.end()) <= 1;
        if (!contract) {
          CHECK_THROWS_AS(theorem_upper_bound_construction(g, f, optimal, 2), ContractError);
          continue;
        }
        auto r = theorem_upper_bound_construction(g, f, optimal, 2);
        CHECK(r.valid);
        CHECK(BigInt(r.actual_weight) <= r.predicted_weight);
        CHECK(r.predicted_weight == bound_value(f, g, 2));
        for (std::size_t i = 1; i < r.step_weights.size(); ++i) CHECK(r.step_weights[i] <= r.step_weights[i - 1]);
        CHECK(r.step_weights.back() == r.actual_weight);
      }
    }
  }
}

TEST_CASE("path construction") {
  auto p5 = path_construction(5, 2);
  CHECK(p5.valid);
  CHECK(p5.actual_weight == 17);
  auto p8 = path_construction(8, 2);
  CHECK(p8.valid);
  CHECK(p8.actual_weight == 43);
  auto p53 = path_construction(5, 3);
  CHECK(p53.valid);
  CHECK(p53.actual_weight == 85);
  CHECK(p53.predicted_weight == 85);
  CHECK_THROWS_AS(path_construction(6, 2), InputError);
  CHECK_THROWS_AS(path_construction(2, 2), InputError);
}

TEST_CASE("cycle construction") {
  auto c4 = cycle_construction(4, 2);
  CHECK(c4.valid);
  CHECK(c4.actual_weight == 8);
  auto c5 = cycle_construction(5, 2);
  CHECK(c5.valid);
  CHECK(c5.actual_weight == 15);
  auto c6 = cycle_construction(6, 2);
  CHECK(c6.valid);
  CHECK(c6.actual_weight == 22);
  REQUIRE(c6.lower_bound);
  REQUIRE(c6.upper_bound);
  CHECK(*c6.lower_bound == 18);
  CHECK(*c6.upper_bound == 22);
  for (std::size_t n = 4; n <= 9; ++n) {
    auto r = cycle_construction(n, 3);
    CHECK(r.valid);
    CHECK(BigInt(r.actual_weight) <= r.predicted_weight);
  }
  CHECK_THROWS_AS(cycle_construction(3, 2), InputError);
}

TEST_CASE("perfect codes of S(K_n,t)") {
  auto s32 = SierpinskiGraph::build(complete_graph(3), 2);
  auto c32 = perfect_code_knt(3, 2);
  CHECK(c32.size() == 3);
  CHECK(is_perfect_code(s32.graph(), c32));
  for (auto e : s32.extreme_vertices()) CHECK(std::binary_search(c32.begin(), c32.end(), e));

  auto s33 = SierpinskiGraph::build(complete_graph(3), 3);
  auto c33 = perfect_code_knt(3, 3);
  CHECK(c33.size() == 7);
  CHECK(is_perfect_code(s33.graph(), c33));
  std::size_t extremes = 0;
  for (auto e : s33.extreme_vertices()) extremes += std::binary_search(c33.begin(), c33.end(), e);
  CHECK(extremes == 1);

  auto c22 = perfect_code_knt(2, 2);
  CHECK(c22.size() == 2);
  CHECK(is_perfect_code(SierpinskiGraph::build(complete_graph(2), 2).graph(), c22));

  for (std::size_t n = 2; n <= 5; ++n)
    for (std::size_t t = 1; t <= 4; ++t) {
      auto code = perfect_code_knt(n, t);
      CHECK(BigInt(code.size()) == gamma_knt(n, t));
      CHECK(is_perfect_code(SierpinskiGraph::build(complete_graph(n), t).graph(), code));
    }
  CHECK_FALSE(is_perfect_code(path_graph(3), VertexSet{0, 2}));
}

TEST_CASE("complete graph construction") {
  auto r32 = complete_graph_construction(3, 2);
  CHECK(r32.valid);
  CHECK(r32.actual_weight == 5);
  CHECK(r32.function[r32.graph.vertex_of_label("11")] == 1);
  CHECK(r32.notes.empty());
  auto r33 = complete_graph_construction(3, 3);
  CHECK(r33.valid);
  CHECK(r33.actual_weight == 14);
  auto r34 = complete_graph_construction(3, 4);
  CHECK(r34.valid);
  CHECK(r34.actual_weight == 41);
  CHECK(r34.function[r34.graph.vertex_of_label("1111")] == 1);
  for (std::size_t n = 2; n <= 5; ++n)
    for (std::size_t t = 1; t <= 4; ++t) {
      auto r = complete_graph_construction(n, t);
      CHECK(r.valid);
      CHECK(BigInt(r.actual_weight) == gamma_r_knt_upper(n, t));
    }
}
