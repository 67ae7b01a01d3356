#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sroman/formulas.hpp"
#include "sroman/roman.hpp"
#include "sroman/sierpinski.hpp"
#include "sroman/solver.hpp"

namespace sroman {

struct ConstructionReport {
  std::string family;  // "theorem", "path", "cycle", "complete"
  SierpinskiGraph graph;
  RomanFunction function;
  BigInt predicted_weight;  // what the construction guarantees (exact or an upper bound)
  std::size_t actual_weight = 0;
  bool valid = false;
  // Theorem construction: the steps that changed the function, and the
  // weight after the lift and after each of them.
  std::vector<std::string> steps_applied;
  std::vector<std::size_t> step_weights;
  std::vector<std::string> notes;
  // Known bounds on gamma_R(S(G,t)) when the exact value is open.
  std::optional<BigInt> lower_bound;
  std::optional<BigInt> upper_bound;
};

/// g(wx) = f(x) on S(G,t). Throws ContractError when f is not Roman
/// dominating on G, InputError for t < 2.
RomanFunction lift_base_function(const RomanFunction& f, const SierpinskiGraph& s);

/// n^{t-2}(n w(f) - |B2| - |D12| - theta + |D1|/2). Throws InternalError on
/// an odd |D1|, ContractError when f is not Roman dominating.
BigInt bound_value(const RomanFunction& f, const Graph& base, std::size_t t);

/// Steps 1-4 applied to a gamma_R-function f of the base graph.
///
/// Optimality of f is established by solving the base graph exactly; the
/// overloads taking a Certificate use it instead (it must validate and its
/// value must equal w(f)). Throws ContractError when f is not optimal and
/// InputError for t < 2. Step 4 rewires one path per vertex counted by
/// theta; predicted_weight subtracts only the vertices actually rewired.
ConstructionReport theorem_upper_bound_construction(const Graph& base, const RomanFunction& f, std::size_t t,
                                                    const SolverOptions& options = {});
ConstructionReport theorem_upper_bound_construction(const Graph& base, const RomanFunction& f,
                                                    const Certificate& optimal, std::size_t t);
ConstructionReport theorem_upper_bound_construction(const Graph& base, const Certificate& optimal,
                                                    std::size_t t);

/// gamma(G) n^{t-2}(2n-1) for a Roman graph G; ContractError otherwise.
BigInt roman_graph_bound(const Graph& base, std::size_t t, const SolverOptions& options = {});

/// The explicit function on S(P_n,t) for n = 3k+2, k >= 1, t >= 2.
ConstructionReport path_construction(std::size_t n, std::size_t t);

/// n = 1 (mod 3): 2 on a 2-packing dominating set; n = 2 (mod 3): explicit
/// 2/1 labelling; n = 0 (mod 3): theorem construction, with the known bounds.
ConstructionReport cycle_construction(std::size_t n, std::size_t t);

/// A 1-perfect code of S(K_n,t): all extreme vertices for even t, exactly
/// the extreme vertex 0...0 for odd t. Vertex ids of S(K_n,t).
VertexSet perfect_code_knt(std::size_t n, std::size_t t);

/// Every vertex of g has exactly one member of `code` in its closed neighbourhood.
bool is_perfect_code(const Graph& g, const VertexSet& code);

/// Recursive construction for even t (f(0...0) = 1), 2 on a perfect code for odd t.
ConstructionReport complete_graph_construction(std::size_t n, std::size_t t);

}  // namespace sroman
