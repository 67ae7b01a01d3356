#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "sroman/solver.hpp"

namespace sroman {

using BigInt = boost::multiprecision::cpp_int;

BigInt big_pow(std::size_t base, std::size_t exponent);

/// A closed-form value, or lower/upper bounds where only those are known.
/// An exact result fills all three fields.
struct ValueOrBounds {
  std::optional<BigInt> exact;
  std::optional<BigInt> lower;
  std::optional<BigInt> upper;

  static ValueOrBounds of(BigInt value);
  static ValueOrBounds between(BigInt lo, BigInt hi);

  /// Whether an observed value is consistent with this record.
  bool admits(const BigInt& value) const;
};

/// ceil(2n/3), the Roman domination number of P_n and C_n.
BigInt gamma_r_path_cycle(std::size_t n);

/// gamma_R(S(P_n,t)). For n = 2 this is gamma_R(P_{2^t}); otherwise n >= 3, t >= 2.
BigInt gamma_r_sierpinski_path(std::size_t n, std::size_t t);

/// Exact for n = 1, 2 (mod 3); bounds for n = 0 (mod 3). Needs n >= 4, t >= 2.
ValueOrBounds gamma_r_sierpinski_cycle(std::size_t n, std::size_t t);

/// gamma(S(K_n,t)), n >= 2, t >= 1.
BigInt gamma_knt(std::size_t n, std::size_t t);

/// Upper bound on gamma_R(S(K_n,t)) realised by the complete-graph construction.
BigInt gamma_r_knt_upper(std::size_t n, std::size_t t);

/// n^{t-2}(2n-1): gamma_R(S(G,t)) for G with exactly one universal vertex.
BigInt universal_vertex_value(std::size_t n, std::size_t t);

/// Same number, as a lower bound for graphs with at most one vertex of degree >= n-2.
BigInt min_degree_lower_bound(std::size_t n, std::size_t t);

struct KntLowerBound {
  BigInt value;
  std::string method;  // "exact" (solved S(K_n,t)) or "domination" (gamma(S(K_n,t)))
};

/// Lower bound on gamma_R(S(G,t)) valid for every graph G of order n:
/// gamma_R(S(K_n,t)) solved exactly when n^t <= max_solver_order and the
/// solver finishes, else gamma(S(K_n,t)).
KntLowerBound knt_lower_bound_for_any_graph(std::size_t n, std::size_t t, const SolverOptions& options = {},
                                            std::size_t max_solver_order = 128);

std::string to_string(const BigInt& x);

}  // namespace sroman
