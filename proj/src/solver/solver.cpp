#include "sroman/solver.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "search.hpp"
#include "sroman/errors.hpp"

namespace sroman {

std::string to_string(Problem p) { return p == Problem::roman ? "roman" : "domination"; }

namespace {

using detail::Node;
using detail::SearchContext;
using detail::Solution;
using Clock = std::chrono::steady_clock;

std::optional<Clock::time_point> deadline_for(const SolverOptions& options) {
  if (!options.timeout) return std::nullopt;
  return Clock::now() + *options.timeout;
}

class Runner {
 public:
  Runner(const Graph& g, detail::SearchSpec spec, const SolverOptions& options)
      : options_(options), ctx_(g, spec, deadline_for(options)) {}

  Solution optimise() {
    Node root = ctx_.root({}, {});
    Solution greedy = ctx_.greedy(root);
    ctx_.reset_optimize(greedy.weight - 1);
    run(std::move(root));
    auto found = ctx_.incumbent();
    return found ? *found : greedy;
  }

  std::optional<Solution> decide(std::size_t weight_cap, std::size_t ones_cap, const VertexSet& forced,
                                 const VertexSet& excluded) {
    ctx_.reset_decide(weight_cap, ones_cap);
    run(ctx_.root(forced, excluded));
    return ctx_.incumbent();
  }

  SolverStats stats() const {
    SolverStats s;
    s.nodes = ctx_.nodes();
    s.passes = passes_;
    return s;
  }

 private:
  void run(Node root) {
    ++passes_;
    if (options_.execution == Execution::parallel) {
      detail::run_parallel(ctx_, std::move(root), options_.threads);
    } else {
      detail::run_serial(ctx_, std::move(root));
    }
    if (ctx_.timed_out()) throw TimeoutError("exact search exceeded its timeout");
  }

  const SolverOptions& options_;
  SearchContext ctx_;
  std::size_t passes_ = 0;
};

// Turns an optimal solution into the canonical one: fewest 1-labels, then the
// lexicographically smallest S. Each step is a feasibility search at the
// optimal weight, so the outcome does not depend on search order.
Solution canonicalise(Runner& runner, Solution best, std::size_t n) {
  const std::size_t weight = best.weight;
  while (best.ones >= 2) {
    auto fewer = runner.decide(weight, best.ones - 2, {}, {});
    if (!fewer) break;
    best = *fewer;
  }
  const std::size_t ones = best.ones;
  const std::size_t members = best.chosen.size();

  VertexSet forced, excluded;
  for (Vertex u = 0; u < n && forced.size() < members; ++u) {
    if (std::binary_search(best.chosen.begin(), best.chosen.end(), u)) {
      forced.push_back(u);
      continue;
    }
    VertexSet attempt = forced;
    attempt.push_back(u);
    if (auto with_u = runner.decide(weight, ones, attempt, excluded)) {
      forced = std::move(attempt);
      best = *with_u;
    } else {
      excluded.push_back(u);
    }
  }
  if (best.chosen != forced) throw InternalError("witness canonicalisation did not converge");
  return best;
}

RomanFunction roman_from_twos(const Graph& g, const VertexSet& twos) {
  std::vector<std::uint8_t> labels(g.order(), 1);
  for (Vertex v : closed_neighborhood(g, twos)) labels[v] = 0;
  for (Vertex v : twos) labels[v] = 2;
  return RomanFunction(std::move(labels));
}

void check_size(const Graph& g, const SolverOptions& options) {
  if (g.order() > options.max_vertices) {
    throw ResourceError("exact solver limited to " + std::to_string(options.max_vertices) +
                        " vertices; graph has " + std::to_string(g.order()));
  }
}

Certificate solve_exact(const Graph& g, const SolverOptions& options, Problem kind) {
  check_size(g, options);
  const auto start = Clock::now();
  detail::SearchSpec spec;
  spec.member_cost = kind == Problem::roman ? 2 : 1;
  spec.allow_ones = kind == Problem::roman;
  Runner runner(g, spec, options);
  Solution best = canonicalise(runner, runner.optimise(), g.order());

  Certificate c;
  c.kind = kind;
  c.value = best.weight;
  c.method = "branch-and-bound";
  if (kind == Problem::roman) {
    c.function = roman_from_twos(g, best.chosen);
  } else {
    c.dominating_set = best.chosen;
  }
  c.stats = runner.stats();
  c.stats.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return c;
}

// Total order used to pick the canonical witness among enumerated subsets.
struct Candidate {
  std::size_t weight = std::numeric_limits<std::size_t>::max();
  std::size_t ones = 0;
  std::uint64_t mask = 0;

  bool better_than(const Candidate& other) const {
    if (weight != other.weight) return weight < other.weight;
    if (ones != other.ones) return ones < other.ones;
    if (mask == other.mask) return false;
    // Equal weight and ones fix |S|; the smaller sorted set owns the lowest differing vertex.
    std::uint64_t lowest = (mask ^ other.mask) & (~(mask ^ other.mask) + 1);
    return (mask & lowest) != 0;
  }
};

Certificate brute_force(const Graph& g, const SolverOptions& options, Problem kind) {
  const std::size_t n = g.order();
  if (n > kBruteForceMaxOrder) {
    throw ResourceError("brute-force oracle limited to " + std::to_string(kBruteForceMaxOrder) +
                        " vertices; graph has " + std::to_string(n));
  }
  const auto start = Clock::now();
  std::vector<std::uint64_t> closed(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    closed[v] = std::uint64_t{1} << v;
    for (Vertex u : g.neighbors(v)) closed[v] |= std::uint64_t{1} << u;
  }
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;

  // Split masks into high and low halves so each low half's N[S] is a table lookup.
  const std::size_t low_bits = std::min<std::size_t>(n, 12);
  const std::uint64_t low_count = std::uint64_t{1} << low_bits;
  const std::int64_t high_count = static_cast<std::int64_t>(std::uint64_t{1} << (n - low_bits));
  std::vector<std::uint64_t> low_dominated(low_count, 0);
  for (std::uint64_t m = 1; m < low_count; ++m) {
    auto bit = static_cast<std::size_t>(std::countr_zero(m));
    low_dominated[m] = low_dominated[m & (m - 1)] | closed[bit];
  }

  const bool roman = kind == Problem::roman;
  const bool parallel = options.execution == Execution::parallel;
  Candidate best;
#pragma omp parallel if (parallel) default(none) \
    shared(best, closed, low_dominated, all, low_bits, low_count, high_count, roman, n)
  {
    Candidate local;
#pragma omp for schedule(static)
    for (std::int64_t h = 0; h < high_count; ++h) {
      const auto high = static_cast<std::uint64_t>(h) << low_bits;
      std::uint64_t high_dominated = 0;
      for (std::uint64_t x = high; x; x &= x - 1) high_dominated |= closed[std::countr_zero(x)];
      for (std::uint64_t low = 0; low < low_count; ++low) {
        const std::uint64_t mask = high | low;
        const std::uint64_t dominated = high_dominated | low_dominated[low];
        const auto members = static_cast<std::size_t>(std::popcount(mask));
        Candidate c;
        c.mask = mask;
        if (roman) {
          c.ones = n - static_cast<std::size_t>(std::popcount(dominated & all));
          c.weight = 2 * members + c.ones;
        } else {
          if ((dominated & all) != all) continue;
          c.weight = members;
        }
        if (c.better_than(local)) local = c;
      }
    }
#pragma omp critical(sroman_brute_force_reduce)
    if (local.better_than(best)) best = local;
  }

  VertexSet chosen;
  for (Vertex v = 0; v < n; ++v)
    if ((best.mask >> v) & 1U) chosen.push_back(v);

  Certificate c;
  c.kind = kind;
  c.value = best.weight;
  c.method = "brute-force";
  if (roman) {
    c.function = roman_from_twos(g, chosen);
  } else {
    c.dominating_set = std::move(chosen);
  }
  c.stats.nodes = std::uint64_t{1} << n;
  c.stats.passes = 1;
  c.stats.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return c;
}

}  // namespace

Certificate gamma_exact(const Graph& g, const SolverOptions& options) {
  return solve_exact(g, options, Problem::domination);
}

Certificate gamma_r_exact(const Graph& g, const SolverOptions& options) {
  return solve_exact(g, options, Problem::roman);
}

Certificate brute_force_gamma(const Graph& g, const SolverOptions& options) {
  return brute_force(g, options, Problem::domination);
}

Certificate brute_force_gamma_r(const Graph& g, const SolverOptions& options) {
  return brute_force(g, options, Problem::roman);
}

RomanGraphResult is_roman_graph(const Graph& g, const SolverOptions& options) {
  RomanGraphResult r;
  auto dom = gamma_exact(g, options);
  auto rom = gamma_r_exact(g, options);
  r.gamma = dom.value;
  r.gamma_r = rom.value;
  r.roman = rom.value == 2 * dom.value;
  if (r.roman) r.witness = RomanFunction::from_sets(g.order(), {}, dom.dominating_set);
  return r;
}

bool validates(const Certificate& c, const Graph& g) {
  if (c.kind == Problem::domination) {
    return std::all_of(c.dominating_set.begin(), c.dominating_set.end(), [&](Vertex v) { return v < g.order(); }) &&
           is_dominating_set(g, c.dominating_set) && c.dominating_set.size() == c.value;
  }
  return c.function.order() == g.order() && is_roman_dominating(c.function, g) && c.function.weight() == c.value;
}

}  // namespace sroman
