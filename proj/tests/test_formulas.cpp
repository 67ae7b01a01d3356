#include "doctest.h"
#include "sroman/errors.hpp"
#include "sroman/formulas.hpp"

using namespace sroman;

TEST_CASE("gamma_R of paths and cycles") {
  CHECK(gamma_r_path_cycle(3) == 2);
  CHECK(gamma_r_path_cycle(7) == 5);
  CHECK(gamma_r_path_cycle(1) == 1);
  CHECK_THROWS_AS(gamma_r_path_cycle(0), InputError);
}

TEST_CASE("S(P_n,t)") {
  CHECK(gamma_r_sierpinski_path(3, 2) == 5);
  CHECK(gamma_r_sierpinski_path(4, 2) == 10);
  CHECK(gamma_r_sierpinski_path(5, 2) == 17);
  CHECK(gamma_r_sierpinski_path(6, 2) == 22);
  CHECK(gamma_r_sierpinski_path(7, 2) == 32);
  CHECK(gamma_r_sierpinski_path(8, 2) == 43);
  CHECK(gamma_r_sierpinski_path(3, 3) == 15);
  // S(P2,t) is the path on 2^t vertices.
  for (std::size_t t = 1; t <= 12; ++t) CHECK(gamma_r_sierpinski_path(2, t) == gamma_r_path_cycle(std::size_t{1} << t));
  CHECK_THROWS_AS(gamma_r_sierpinski_path(3, 1), InputError);
  CHECK_THROWS_AS(gamma_r_sierpinski_path(1, 2), InputError);
}

TEST_CASE("S(C_n,t)") {
  auto c5 = gamma_r_sierpinski_cycle(5, 2);
  CHECK(c5.exact == BigInt(15));
  CHECK(c5.lower == BigInt(15));
  CHECK(c5.upper == BigInt(15));
  CHECK(gamma_r_sierpinski_cycle(4, 2).exact == BigInt(8));
  auto c6 = gamma_r_sierpinski_cycle(6, 2);
  CHECK_FALSE(c6.exact);
  CHECK(c6.lower == BigInt(18));
  CHECK(c6.upper == BigInt(22));
  CHECK(c6.admits(20));
  CHECK_FALSE(c6.admits(23));
  for (std::size_t n = 6; n <= 30; n += 3)
    for (std::size_t t = 2; t <= 6; ++t) {
      auto b = gamma_r_sierpinski_cycle(n, t);
      CHECK(3 * (*b.upper - *b.lower) == 2 * big_pow(n, t - 1));
    }
  CHECK_THROWS_AS(gamma_r_sierpinski_cycle(3, 2), InputError);
}

TEST_CASE("S(K_n,t)") {
  CHECK(gamma_knt(3, 2) == 3);
  CHECK(gamma_knt(3, 3) == 7);
  CHECK(gamma_knt(2, 2) == 2);
  CHECK(gamma_knt(3, 5) == 61);
  CHECK(gamma_r_knt_upper(3, 2) == 5);
  CHECK(gamma_r_knt_upper(3, 3) == 14);
  CHECK(gamma_r_knt_upper(4, 2) == 7);
  CHECK(gamma_r_knt_upper(3, 4) == 41);
  // Exact division for a wide range; a non-exact one would throw.
  for (std::size_t n = 2; n <= 40; ++n)
    for (std::size_t t = 1; t <= 25; ++t) {
      CHECK_NOTHROW(gamma_knt(n, t));
      CHECK_NOTHROW(gamma_r_knt_upper(n, t));
      CHECK(gamma_knt(n, t) <= gamma_r_knt_upper(n, t));
    }
}

TEST_CASE("big integers do not overflow") {
  CHECK(big_pow(3, 40) == BigInt("12157665459056928801"));
  CHECK(to_string(gamma_knt(10, 25)) == to_string((big_pow(10, 25) + 1) / 11));
}

TEST_CASE("universal-vertex value and degree lower bound") {
  CHECK(universal_vertex_value(4, 2) == 7);
  CHECK(universal_vertex_value(5, 2) == 9);
  CHECK(universal_vertex_value(4, 3) == 28);
  CHECK(min_degree_lower_bound(5, 2) == 9);
  CHECK(min_degree_lower_bound(5, 2) <= gamma_r_sierpinski_path(5, 2));
  CHECK(min_degree_lower_bound(6, 2) == 11);
  CHECK(min_degree_lower_bound(4, 2) == 7);
}

TEST_CASE("lower bound from S(K_n,t)") {
  auto k3 = knt_lower_bound_for_any_graph(3, 2);
  CHECK(k3.method == "exact");
  CHECK(k3.value == 5);
  auto k4 = knt_lower_bound_for_any_graph(4, 2);
  CHECK(k4.method == "exact");
  CHECK(k4.value <= 7);
  auto k35 = knt_lower_bound_for_any_graph(3, 5);
  CHECK(k35.method == "domination");
  CHECK(k35.value == 61);
}
