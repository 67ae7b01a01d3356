#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sroman/formulas.hpp"
#include "sroman/json_io.hpp"
#include "sroman/solver.hpp"

namespace sroman {

/// One (theorem, instance) comparison of a closed form against the solver
/// and the matching construction.
struct VerifyRow {
  std::string theorem;   // path | cycle | knt-gamma | knt-gamma-r | universal
  std::string instance;  // e.g. "S(P_5,2)"
  std::size_t n = 0;
  std::size_t t = 0;
  ValueOrBounds formula;
  std::optional<std::size_t> solver_value;
  std::optional<std::size_t> construction_weight;
  std::string status;  // pass | fail | timeout
  std::string detail;
};

struct VerifyOptions {
  std::vector<std::string> families{"paths", "cycles", "complete", "universal"};
  std::optional<std::size_t> n_min;  // family default when unset
  std::size_t n_max = 6;
  std::size_t t_min = 2;
  std::size_t t_max = 2;
  SolverOptions solver;
  // Rows on larger S(G,t) rely on the construction and the formula only.
  std::size_t max_solver_order = 256;
};

inline const std::vector<std::string> kVerifyFamilies{"paths", "cycles", "complete", "universal"};

/// Rows ordered by family, then n, then t. Throws InputError on an unknown family.
std::vector<VerifyRow> verify(const VerifyOptions& options);

struct SweepOptions {
  std::size_t count = 20;
  std::size_t n_min = 2;
  std::size_t n_max = 5;
  std::size_t t = 2;
  double edge_probability = 0.3;
  std::uint64_t seed = 1;
  SolverOptions solver;
};

/// Property checks on one random connected base graph G and a spanning
/// subgraph H of G with one edge removed.
struct SweepRow {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  Graph base;
  std::optional<Edge> removed;
  std::size_t gamma = 0, gamma_r = 0, gamma_r_sub = 0;
  std::size_t s_gamma = 0, s_gamma_r = 0, s_gamma_r_sub = 0;
  BigInt bound;
  std::size_t construction_weight = 0;
  KntLowerBound knt;
  std::vector<std::pair<std::string, bool>> checks;
  std::string status;  // pass | fail | timeout
  std::string detail;
};

std::vector<SweepRow> sweep(const SweepOptions& options);

Json row_to_json(const VerifyRow& row);
Json row_to_json(const SweepRow& row);

/// 0 if every row passed, 1 if any failed, otherwise 3 if any timed out.
template <typename Row>
int exit_status(const std::vector<Row>& rows) {
  bool timeout = false;
  for (const auto& r : rows) {
    if (r.status == "fail") return 1;
    timeout = timeout || r.status == "timeout";
  }
  return timeout ? 3 : 0;
}

}  // namespace sroman
