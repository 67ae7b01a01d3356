#include "sroman/formulas.hpp"

#include "sroman/errors.hpp"
#include "sroman/generators.hpp"
#include "sroman/sierpinski.hpp"

namespace sroman {

namespace {

BigInt ceil_div(const BigInt& a, const BigInt& b) { return (a + b - 1) / b; }

BigInt exact_div(const BigInt& a, const BigInt& b, const char* what) {
  if (a % b != 0) throw InternalError(std::string(what) + ": division is not exact");
  return a / b;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw InputError(message);
}

}  // namespace

BigInt big_pow(std::size_t base, std::size_t exponent) {
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exponent));
}

std::string to_string(const BigInt& x) { return x.str(); }

ValueOrBounds ValueOrBounds::of(BigInt value) {
  ValueOrBounds v;
  v.exact = value;
  v.lower = value;
  v.upper = value;
  return v;
}

ValueOrBounds ValueOrBounds::between(BigInt lo, BigInt hi) {
  if (lo > hi) throw InternalError("lower bound exceeds upper bound");
  ValueOrBounds v;
  v.lower = std::move(lo);
  v.upper = std::move(hi);
  return v;
}

bool ValueOrBounds::admits(const BigInt& value) const {
  if (exact) return value == *exact;
  return (!lower || *lower <= value) && (!upper || value <= *upper);
}

BigInt gamma_r_path_cycle(std::size_t n) {
  require(n >= 1, "gamma_R(P_n) needs n >= 1");
  return ceil_div(BigInt(2 * n), 3);
}

BigInt gamma_r_sierpinski_path(std::size_t n, std::size_t t) {
  require(t >= 1, "depth t must be at least 1");
  if (n == 2) return ceil_div(2 * big_pow(2, t), 3);
  require(n >= 3, "S(P_n,t) formula needs n >= 2");
  require(t >= 2, "S(P_n,t) formula needs t >= 2");
  const BigInt scale = big_pow(n, t - 2);
  const BigInt two_thirds = ceil_div(BigInt(2 * n), 3);
  const BigInt third = ceil_div(BigInt(n), 3);
  if (n % 3 == 2) return scale * (n * two_thirds - 2 * third + 1);
  return scale * (n * two_thirds - third);
}

ValueOrBounds gamma_r_sierpinski_cycle(std::size_t n, std::size_t t) {
  require(n >= 4, "S(C_n,t) formula needs n >= 4");
  require(t >= 2, "S(C_n,t) formula needs t >= 2");
  const BigInt scale = big_pow(n, t - 1);
  if (n % 3 != 0) return ValueOrBounds::of(scale * ((2 * n) / 3));
  return ValueOrBounds::between(exact_div(scale * (2 * n - 3), 3, "cycle lower bound"),
                                exact_div(scale * (2 * n - 1), 3, "cycle upper bound"));
}

BigInt gamma_knt(std::size_t n, std::size_t t) {
  require(n >= 2, "S(K_n,t) needs n >= 2");
  require(t >= 1, "depth t must be at least 1");
  const BigInt power = big_pow(n, t);
  return exact_div(BigInt(power + (t % 2 == 0 ? n : 1)), BigInt(n + 1), "gamma(S(K_n,t))");
}

BigInt gamma_r_knt_upper(std::size_t n, std::size_t t) {
  require(n >= 2, "S(K_n,t) needs n >= 2");
  require(t >= 1, "depth t must be at least 1");
  const BigInt power = big_pow(n, t);
  if (t % 2 == 0) return exact_div(BigInt(2 * power + n - 1), BigInt(n + 1), "gamma_R(S(K_n,t)) bound");
  return 2 * exact_div(power + 1, BigInt(n + 1), "gamma_R(S(K_n,t)) bound");
}

BigInt universal_vertex_value(std::size_t n, std::size_t t) {
  require(n >= 2, "order n must be at least 2");
  require(t >= 2, "depth t must be at least 2");
  return big_pow(n, t - 2) * (2 * n - 1);
}

BigInt min_degree_lower_bound(std::size_t n, std::size_t t) { return universal_vertex_value(n, t); }

KntLowerBound knt_lower_bound_for_any_graph(std::size_t n, std::size_t t, const SolverOptions& options,
                                            std::size_t max_solver_order) {
  KntLowerBound out;
  const BigInt order = big_pow(n, t);
  if (n >= 2 && order <= max_solver_order) {
    try {
      auto s = SierpinskiGraph::build(complete_graph(n), t);
      out.value = gamma_r_exact(s.graph(), options).value;
      out.method = "exact";
      return out;
    } catch (const ResourceError&) {
      // fall through to the domination bound
    }
  }
  out.value = gamma_knt(n, t);
  out.method = "domination";
  return out;
}

}  // namespace sroman
