#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "sroman/graph.hpp"
#include "sroman/roman.hpp"

namespace sroman {

enum class Problem { domination, roman };

std::string to_string(Problem p);

enum class Execution {
  serial,    // reference depth-first search
  parallel,  // OpenMP tasks over the top of the search tree
};

struct SolverOptions {
  Execution execution = Execution::parallel;
  int threads = 0;  // 0: OpenMP default
  std::optional<std::chrono::milliseconds> timeout;
  // Exact search refuses larger graphs with a ResourceError.
  std::size_t max_vertices = 4096;
};

struct SolverStats {
  std::uint64_t nodes = 0;     // search nodes over all passes (or subsets enumerated)
  std::size_t passes = 0;      // optimisation + witness canonicalisation searches
  double elapsed_seconds = 0;
};

/// An optimal value with a witness that validates against the graph.
///
/// Witnesses are canonical: for domination, the lexicographically smallest
/// minimum dominating set; for Roman domination, B2 = S, B1 = V \ N[S],
/// B0 = N[S] \ S for the S that first minimises weight, then |B1|, then is
/// lexicographically smallest. Serial and parallel runs therefore agree.
struct Certificate {
  Problem kind = Problem::roman;
  std::size_t value = 0;
  VertexSet dominating_set;  // kind == domination
  RomanFunction function;    // kind == roman
  std::string method;        // "branch-and-bound" or "brute-force"
  SolverStats stats;
};

/// gamma(G). Throws ResourceError above the vertex limit, TimeoutError on timeout.
Certificate gamma_exact(const Graph& g, const SolverOptions& options = {});

/// gamma_R(G), searching over B2 with the forced completion.
Certificate gamma_r_exact(const Graph& g, const SolverOptions& options = {});

inline constexpr std::size_t kBruteForceMaxOrder = 22;

/// Subset enumeration over all 2^n candidate sets; same contract and same
/// canonical witness as the exact solvers. Throws ResourceError for n > 22.
Certificate brute_force_gamma(const Graph& g, const SolverOptions& options = {});
Certificate brute_force_gamma_r(const Graph& g, const SolverOptions& options = {});

struct RomanGraphResult {
  bool roman = false;
  std::size_t gamma = 0;
  std::size_t gamma_r = 0;
  // A gamma_R-function with B1 empty, present iff roman.
  std::optional<RomanFunction> witness;
};

/// gamma_R(G) == 2 gamma(G); the witness labels a minimum dominating set with 2.
RomanGraphResult is_roman_graph(const Graph& g, const SolverOptions& options = {});

/// Witness is well formed for g and its weight/size equals the value.
bool validates(const Certificate& c, const Graph& g);

}  // namespace sroman
