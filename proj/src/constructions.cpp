#include "sroman/constructions.hpp"

#include <algorithm>
#include <set>

#include "sroman/errors.hpp"
#include "sroman/generators.hpp"

namespace sroman {

namespace {

using Labels = std::vector<std::uint8_t>;

std::size_t labels_weight(const Labels& labels) {
  std::size_t total = 0;
  for (auto x : labels) total += x;
  return total;
}

void require_depth(std::size_t t) {
  if (t < 2) throw InputError("this construction needs t >= 2, got " + std::to_string(t));
}

void require_rdf(const RomanFunction& f, const Graph& base) {
  if (!is_roman_dominating(f, base)) throw ContractError("base function is not Roman dominating");
}

// Vertex w x y of S(G,t) for a prefix index w over V^{t-2}.
struct Addresser {
  std::size_t n;
  Vertex operator()(std::size_t w, Vertex x, Vertex y) const {
    return static_cast<Vertex>((w * n + x) * n + y);
  }
};

struct BoundTerms {
  std::size_t weight = 0;
  std::size_t b2 = 0;
  std::size_t d12 = 0;
  std::size_t theta = 0;
  std::size_t d1 = 0;
};

BoundTerms bound_terms(const RomanFunction& f, const Graph& base) {
  auto ds = derived_sets(f, base);
  if (ds.d1.size() % 2 != 0) throw InternalError("|D1| is odd");
  return {f.weight(), f.count(2), ds.d12.size(), ds.theta, ds.d1.size()};
}

BigInt evaluate_bound(const BoundTerms& b, std::size_t n, std::size_t t, bool with_theta) {
  BigInt inner = BigInt(n) * b.weight - b.b2 - b.d12 + b.d1 / 2;
  if (with_theta) inner -= b.theta;
  return big_pow(n, t - 2) * inner;
}

void finish(ConstructionReport& r, Labels labels) {
  r.function = RomanFunction(std::move(labels));
  r.actual_weight = r.function.weight();
  r.valid = is_roman_dominating(r.function, r.graph.graph());
}

// Step 4 rewiring around the paths v0, w2, w0, w1. Each lonely 1-vertex w1
// at distance two from B2' gets one path (the first, in lex order, whose
// rewiring keeps g Roman dominating); every rewired path saves n^{t-2}.
// Returns the number of rewired vertices w1.
std::size_t step_four(const Graph& base, const RomanFunction& f, const DerivedSets& ds, const SierpinskiGraph& s,
                      Labels& labels, std::vector<std::string>& notes) {
  if (ds.b2_prime.empty()) return 0;
  const std::size_t n = base.order();
  std::vector<char> lonely_one(n, 0);
  for (Vertex u : f.b1())
    if (!std::binary_search(ds.d1.begin(), ds.d1.end(), u)) lonely_one[u] = 1;

  struct Path {
    Vertex v0, w2, w0;
  };
  std::vector<std::vector<Path>> paths(n);
  for (Vertex w2 : ds.b2_prime) {
    VertexSet zeros;
    for (Vertex x : base.neighbors(w2))
      if (f[x] == 0) zeros.push_back(x);
    for (Vertex v0 : zeros)
      for (Vertex w0 : zeros) {
        if (v0 == w0) continue;
        for (Vertex w1 : base.neighbors(w0))
          if (lonely_one[w1]) paths[w1].push_back({v0, w2, w0});
      }
  }

  const Addresser at{n};
  const std::size_t prefixes = s.copy_count() / n;
  std::size_t rewired = 0;
  for (Vertex w1 = 0; w1 < n; ++w1) {
    if (paths[w1].empty()) continue;
    if (paths[w1].size() > 1)
      notes.push_back("step 4: vertex " + std::to_string(w1) + " lies on " + std::to_string(paths[w1].size()) +
                      " paths");
    bool done = false;
    for (const auto& p : paths[w1]) {
      Labels next = labels;
      for (std::size_t w = 0; w < prefixes; ++w) {
        next[at(w, p.w0, w1)] = 0;
        next[at(w, w1, w1)] = 0;
        next[at(w, w1, p.w2)] = 0;
        next[at(w, w1, p.v0)] = 1;
        next[at(w, w1, p.w0)] = 2;
      }
      if (labels_weight(next) + prefixes != labels_weight(labels)) continue;
      if (!is_roman_dominating(RomanFunction(next), s.graph())) continue;
      labels = std::move(next);
      done = true;
      break;
    }
    if (done) {
      ++rewired;
    } else {
      notes.push_back("step 4 skipped for vertex " + std::to_string(w1) + ": no path keeps g Roman dominating");
    }
  }
  return rewired;
}

// Steps 1-4 for an f already known to be a gamma_R-function.
ConstructionReport theorem_construction(const Graph& base, const RomanFunction& f, std::size_t t) {
  require_depth(t);
  ConstructionReport r;
  r.family = "theorem";
  r.graph = SierpinskiGraph::build(base, t);
  const auto& s = r.graph;
  const std::size_t n = base.order();
  const auto ds = derived_sets(f, base);
  const auto terms = bound_terms(f, base);

  for (const auto& [u, v] : base.edges()) {
    if ((f[u] == 1 && f[v] == 2) || (f[u] == 2 && f[v] == 1))
      throw ContractError("f has an edge between B1 and B2, so it is not weight-minimal");
  }
  for (Vertex v : f.b1()) {
    auto nb = base.neighbors(v);
    if (std::count_if(nb.begin(), nb.end(), [&](Vertex u) { return f[u] == 1; }) > 1)
      throw ContractError("<B1> has a vertex of degree >= 2, so f is not weight-minimal");
  }

  Labels labels(s.order());
  for (Vertex v = 0; v < s.order(); ++v) labels[v] = static_cast<std::uint8_t>(f[s.last_letter(v)]);
  r.step_weights.push_back(labels_weight(labels));

  const Addresser at{n};
  const std::size_t prefixes = s.copy_count() / n;
  auto record = [&](const std::string& step) {
    r.steps_applied.push_back(step);
    r.step_weights.push_back(labels_weight(labels));
    if (!is_roman_dominating(RomanFunction(labels), s.graph()))
      r.notes.push_back(step + " produced a function that is not Roman dominating");
  };

  const VertexSet b2 = f.b2();
  if (!b2.empty()) {
    for (std::size_t w = 0; w < prefixes; ++w)
      for (Vertex u : b2) labels[at(w, u, u)] = 1;
    record("step1");
  }
  if (!ds.d2.empty()) {
    for (std::size_t w = 0; w < prefixes; ++w)
      for (Vertex v : ds.d2) labels[at(w, v, v)] = 0;
    record("step2");
  }
  if (!ds.d1.empty()) {
    for (Vertex v : ds.d1) {
      for (Vertex u : base.neighbors(v)) {
        if (f[u] != 1 || u < v) continue;
        for (std::size_t w = 0; w < prefixes; ++w) {
          labels[at(w, v, v)] = 0;
          labels[at(w, u, v)] = 0;
          labels[at(w, v, u)] = 2;
        }
      }
    }
    record("step3");
  }
  const std::size_t rewired = step_four(base, f, ds, s, labels, r.notes);
  if (rewired > 0) record("step4");

  r.predicted_weight = evaluate_bound(terms, n, t, false) - big_pow(n, t - 2) * rewired;
  finish(r, std::move(labels));
  return r;
}

void check_certificate(const Graph& base, const RomanFunction& f, const Certificate& optimal) {
  if (optimal.kind != Problem::roman || !validates(optimal, base))
    throw ContractError("certificate is not a valid gamma_R certificate for the base graph");
  require_rdf(f, base);
  if (f.weight() != optimal.value) {
    throw ContractError("f has weight " + std::to_string(f.weight()) + " but gamma_R(G) = " +
                        std::to_string(optimal.value));
  }
}

}  // namespace

RomanFunction lift_base_function(const RomanFunction& f, const SierpinskiGraph& s) {
  require_depth(s.depth());
  require_rdf(f, s.base());
  Labels labels(s.order());
  for (Vertex v = 0; v < s.order(); ++v) labels[v] = static_cast<std::uint8_t>(f[s.last_letter(v)]);
  return RomanFunction(std::move(labels));
}

BigInt bound_value(const RomanFunction& f, const Graph& base, std::size_t t) {
  require_depth(t);
  return evaluate_bound(bound_terms(f, base), base.order(), t, true);
}

ConstructionReport theorem_upper_bound_construction(const Graph& base, const RomanFunction& f, std::size_t t,
                                                    const SolverOptions& options) {
  require_depth(t);
  return theorem_upper_bound_construction(base, f, gamma_r_exact(base, options), t);
}

ConstructionReport theorem_upper_bound_construction(const Graph& base, const RomanFunction& f,
                                                    const Certificate& optimal, std::size_t t) {
  require_depth(t);
  check_certificate(base, f, optimal);
  return theorem_construction(base, f, t);
}

ConstructionReport theorem_upper_bound_construction(const Graph& base, const Certificate& optimal,
                                                    std::size_t t) {
  return theorem_upper_bound_construction(base, optimal.function, optimal, t);
}

BigInt roman_graph_bound(const Graph& base, std::size_t t, const SolverOptions& options) {
  require_depth(t);
  auto r = is_roman_graph(base, options);
  if (!r.roman) throw ContractError("graph is not Roman: gamma_R = " + std::to_string(r.gamma_r) +
                                    ", gamma = " + std::to_string(r.gamma));
  const std::size_t n = base.order();
  return BigInt(r.gamma) * big_pow(n, t - 2) * (2 * n - 1);
}

ConstructionReport path_construction(std::size_t n, std::size_t t) {
  if (n < 5 || n % 3 != 2) throw InputError("path construction needs n = 3k+2 with k >= 1, got n = " + std::to_string(n));
  require_depth(t);
  const std::size_t k = (n - 2) / 3;
  ConstructionReport r;
  r.family = "path";
  r.graph = SierpinskiGraph::build(path_graph(n), t);
  const Addresser at{n};
  const std::size_t prefixes = r.graph.copy_count() / n;

  // Letters below are 1..n as in the usual presentation; at() takes 0-based letters.
  std::vector<std::size_t> S;
  for (std::size_t s = 2; s <= n - 1; s += 3) S.push_back(s);
  std::vector<std::pair<std::size_t, std::size_t>> twos, ones;
  for (std::size_t s : S)
    for (std::size_t i = s + 2; i <= n; ++i) twos.emplace_back(i, s);
  twos.emplace_back(1, n - 1);
  twos.emplace_back(n, n - 1);
  for (std::size_t i = 1; i <= n - 2; ++i)
    for (std::size_t kk = 0; kk < k; ++kk)
      if (std::size_t j = i + 1 + 3 * kk; j <= n) twos.emplace_back(i, j);
  for (std::size_t s : S) {
    ones.emplace_back(s, n);
    ones.emplace_back(s + 1, s - 1);
  }
  ones.emplace_back(n - 1, n - 1);

  Labels labels(r.graph.order(), 0);
  std::size_t clashes = 0;
  for (std::size_t w = 0; w < prefixes; ++w) {
    for (auto [i, j] : ones) labels[at(w, static_cast<Vertex>(i - 1), static_cast<Vertex>(j - 1))] = 1;
    for (auto [i, j] : twos) {
      auto& x = labels[at(w, static_cast<Vertex>(i - 1), static_cast<Vertex>(j - 1))];
      if (x == 1) ++clashes;
      x = 2;
    }
  }
  if (clashes) r.notes.push_back(std::to_string(clashes) + " vertices are in both a 2-set and a 1-set");
  r.predicted_weight = big_pow(n, t - 2) * (6 * k * k + 8 * k + 3);
  finish(r, std::move(labels));
  return r;
}

ConstructionReport cycle_construction(std::size_t n, std::size_t t) {
  if (n < 4) throw InputError("cycle construction needs n >= 4, got n = " + std::to_string(n));
  require_depth(t);
  const Graph cycle = cycle_graph(n);
  const auto bounds = gamma_r_sierpinski_cycle(n, t);

  if (n % 3 == 0) {
    std::vector<std::uint8_t> base_labels(n, 0);
    for (std::size_t i = 1; i < n; i += 3) base_labels[i] = 2;
    // Weight 2n/3 = ceil(2n/3), so this f is a gamma_R-function of C_n.
    auto r = theorem_construction(cycle, RomanFunction(std::move(base_labels)), t);
    r.family = "cycle";
    r.lower_bound = bounds.lower;
    r.upper_bound = bounds.upper;
    return r;
  }

  ConstructionReport r;
  r.family = "cycle";
  r.graph = SierpinskiGraph::build(cycle, t);
  const Addresser at{n};
  const std::size_t prefixes = r.graph.copy_count() / n;
  Labels labels(r.graph.order(), 0);
  const std::size_t k = n / 3;
  for (std::size_t w = 0; w < prefixes; ++w) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t kk = 0; kk < k; ++kk)
        labels[at(w, static_cast<Vertex>(i), static_cast<Vertex>((i + 1 + 3 * kk) % n))] = 2;
      if (n % 3 == 2) labels[at(w, static_cast<Vertex>(i), static_cast<Vertex>((i + n - 2) % n))] = 1;
    }
  }
  bool structure_ok = true;
  if (n % 3 == 1) {
    VertexSet twos;
    for (Vertex v = 0; v < labels.size(); ++v)
      if (labels[v] == 2) twos.push_back(v);
    const bool packing = is_perfect_code(r.graph.graph(), twos);
    const bool avoids_diagonal = std::none_of(twos.begin(), twos.end(), [&](Vertex v) {
      return v / n % n == v % n;
    });
    r.notes.push_back(std::string("2-labelled set is ") + (packing ? "" : "not ") +
                      "a 2-packing dominating set" + (avoids_diagonal ? "" : " and meets {wii}"));
    structure_ok = packing && avoids_diagonal;
  }
  r.predicted_weight = *bounds.exact;
  r.lower_bound = bounds.lower;
  r.upper_bound = bounds.upper;
  finish(r, std::move(labels));
  r.valid = r.valid && structure_ok;
  return r;
}

ConstructionReport complete_graph_construction(std::size_t n, std::size_t t) {
  if (n < 2) throw InputError("S(K_n,t) needs n >= 2");
  if (t < 1) throw InputError("depth t must be at least 1");
  ConstructionReport r;
  r.family = "complete";
  r.graph = SierpinskiGraph::build(complete_graph(n), t);
  r.predicted_weight = gamma_r_knt_upper(n, t);

  if (t % 2 == 1) {
    Labels labels(r.graph.order(), 0);
    for (Vertex c : perfect_code_knt(n, t)) labels[c] = 2;
    finish(r, std::move(labels));
    return r;
  }

  // t = 2: f(00) = 1 and f(i0) = 2 for i != 0.
  Labels f(n * n, 0);
  f[0] = 1;
  for (std::size_t i = 1; i < n; ++i) f[i * n] = 2;

  // From S(K_n,2k) to S(K_n,2k+2); words of the new graph are a b w with |w| = 2k.
  for (std::size_t depth = 2; depth < t; depth += 2) {
    const std::size_t m = f.size();
    std::vector<char> in_code(m, 0);
    for (Vertex c : perfect_code_knt(n, depth)) in_code[c] = 1;
    Labels next(m * n * n, 0);
    auto block = [&](std::size_t a, std::size_t b) { return (a * n + b) * m; };
    const std::size_t repunit = (m - 1) / (n - 1);  // id of 11...1

    std::copy(f.begin(), f.end(), next.begin() + static_cast<std::ptrdiff_t>(block(0, 0)));
    for (std::size_t i = 1; i < n; ++i) {
      // <0 i *>: f with letters 0 and i exchanged; its extreme i...i gets 0.
      for (std::size_t w = 0; w < m; ++w) {
        std::size_t swapped = 0, place = 1;
        for (std::size_t rest = w; place < m; rest /= n, place *= n) {
          std::size_t d = rest % n;
          d = d == 0 ? i : (d == i ? 0 : d);
          swapped += d * place;
        }
        next[block(0, i) + w] = f[swapped];
      }
      next[block(0, i) + i * repunit] = 0;
      for (std::size_t w = 0; w < m; ++w) next[block(i, 0) + w] = in_code[w] ? 2 : 0;
      for (std::size_t j = 1; j < n; ++j) {
        std::copy(f.begin(), f.end(), next.begin() + static_cast<std::ptrdiff_t>(block(i, j)));
        next[block(i, j)] = 0;
      }
    }
    f = std::move(next);
  }
  // Exchange letters 0 and 1 so that the 1-label sits on 1...1.
  Labels out(f.size(), 0);
  for (std::size_t w = 0; w < f.size(); ++w) {
    std::size_t image = 0, place = 1;
    for (std::size_t rest = w; place < f.size(); rest /= n, place *= n) {
      std::size_t d = rest % n;
      image += (d < 2 ? 1 - d : d) * place;
    }
    out[image] = f[w];
  }
  const std::size_t ones = (f.size() - 1) / (n - 1);
  if (out[ones] != 1) r.notes.push_back("f(1...1) is not 1");
  finish(r, std::move(out));
  return r;
}

}  // namespace sroman
