#include "search.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace sroman::detail {

namespace {

inline bool test(const Word64* bits, Vertex v) { return (bits[v >> 6] >> (v & 63)) & 1U; }
inline void set(Word64* bits, Vertex v) { bits[v >> 6] |= Word64{1} << (v & 63); }
inline void clear(Word64* bits, Vertex v) { bits[v >> 6] &= ~(Word64{1} << (v & 63)); }

template <typename F>
void for_each_bit(const Word64* bits, std::size_t words, F&& f) {
  for (std::size_t w = 0; w < words; ++w) {
    Word64 x = bits[w];
    while (x) {
      f(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(x))));
      x &= x - 1;
    }
  }
}

constexpr std::uint64_t kDeadlineStride = 1024;

}  // namespace

SearchContext::SearchContext(const Graph& g, SearchSpec spec, std::optional<Clock::time_point> deadline)
    : graph_(g), spec_(spec), n_(g.order()), words_((g.order() + 63) / 64), deadline_(deadline) {
  closed_.assign(n_ * words_, 0);
  for (Vertex v = 0; v < n_; ++v) {
    Word64* row = closed_.data() + v * words_;
    set(row, v);
    for (Vertex u : g.neighbors(v)) set(row, u);
  }
}

Node SearchContext::root(const VertexSet& forced, const VertexSet& excluded) const {
  Node node;
  node.bits.assign(4 * words_, 0);
  Word64* al = allowed(node);
  for (Vertex v = 0; v < n_; ++v) set(al, v);
  for (Vertex v : excluded) clear(al, v);
  for (Vertex v : forced) {
    set(chosen(node), v);
    clear(al, v);
    const Word64* row = closed(v);
    for (std::size_t w = 0; w < words_; ++w) dominated(node)[w] |= row[w];
  }
  node.chosen_count = forced.size();
  return node;
}

void SearchContext::reset_optimize(std::size_t cap) {
  weight_cap_ = cap;
  ones_cap_ = spec_.allow_ones ? n_ : 0;
  stop_on_first_ = false;
  done_ = false;
  timed_out_ = false;
  incumbent_.reset();
}

void SearchContext::reset_decide(std::size_t weight_cap, std::size_t ones_cap) {
  weight_cap_ = weight_cap;
  ones_cap_ = spec_.allow_ones ? ones_cap : 0;
  stop_on_first_ = true;
  done_ = false;
  timed_out_ = false;
  incumbent_.reset();
}

std::optional<Solution> SearchContext::incumbent() const {
  std::lock_guard lock(mutex_);
  return incumbent_;
}

void SearchContext::offer(const Solution& s) {
  std::lock_guard lock(mutex_);
  if (s.weight > weight_cap_.load() || s.ones > ones_cap_) return;
  incumbent_ = s;
  if (stop_on_first_ || s.weight == 0) {
    done_ = true;
  } else {
    weight_cap_ = s.weight - 1;
  }
}

Solution SearchContext::to_solution(Node& node) const {
  Solution s;
  for_each_bit(chosen(node), words_, [&](Vertex v) { s.chosen.push_back(v); });
  s.ones = node.ones_count;
  s.weight = spec_.member_cost * node.chosen_count + node.ones_count;
  return s;
}

bool SearchContext::accept(const Node& node, std::size_t weight) {
  if (weight > weight_cap_.load(std::memory_order_relaxed) || node.ones_count > ones_cap_) return false;
  Node copy = node;
  offer(to_solution(copy));
  return true;
}

bool SearchContext::expand(Node& node, std::vector<Node>& children) {
  children.clear();
  if (finished()) return false;
  auto count = ++nodes_;
  if (deadline_ && count % kDeadlineStride == 0 && Clock::now() > *deadline_) {
    timed_out_ = true;
    return false;
  }

  Word64* dom = dominated(node);
  Word64* al = allowed(node);
  Word64* on = ones(node);
  const Word64 tail_mask = (n_ % 64 == 0) ? ~Word64{0} : ((Word64{1} << (n_ % 64)) - 1);

  std::vector<Word64> open(words_);
  auto refresh_open = [&] {
    for (std::size_t w = 0; w < words_; ++w) open[w] = ~dom[w] & ~on[w];
    open[words_ - 1] &= tail_mask;
  };
  refresh_open();

  // An open vertex without an allowed dominator must pay 1 (or is infeasible).
  bool forced_any = false;
  bool infeasible = false;
  for_each_bit(open.data(), words_, [&](Vertex x) {
    const Word64* row = closed(x);
    for (std::size_t w = 0; w < words_; ++w)
      if (row[w] & al[w]) return;
    if (!spec_.allow_ones) {
      infeasible = true;
      return;
    }
    set(on, x);
    ++node.ones_count;
    forced_any = true;
  });
  if (infeasible || node.ones_count > ones_cap_) return false;
  if (forced_any) refresh_open();

  const std::size_t cost = spec_.member_cost * node.chosen_count + node.ones_count;
  const std::size_t cap = weight_cap_.load(std::memory_order_relaxed);
  if (cost > cap) return false;

  bool any_open = false;
  for (std::size_t w = 0; w < words_; ++w) any_open = any_open || open[w];
  if (!any_open) {
    accept(node, cost);
    return false;
  }

  // coverage[u]: open vertices a new member u would dominate.
  std::vector<int> coverage(n_, -1);
  auto cover_of = [&](Vertex u) {
    if (coverage[u] < 0) {
      const Word64* row = closed(u);
      int c = 0;
      for (std::size_t w = 0; w < words_; ++w) c += std::popcount(row[w] & open[w]);
      coverage[u] = c;
    }
    return coverage[u];
  };

  // Each open vertex is charged min(1, cost / best coverage among its
  // dominators): a member's cost spread over the vertices it covers, or the
  // fallback label 1. The sum is an admissible bound.
  double bound = static_cast<double>(cost);
  Vertex branch = 0;
  int branch_options = -1;
  int branch_cover = -1;
  const auto member_cost = static_cast<double>(spec_.member_cost);
  for_each_bit(open.data(), words_, [&](Vertex x) {
    int best = 0;
    int options = 0;
    auto consider = [&](Vertex u) {
      if (!test(al, u)) return;
      ++options;
      best = std::max(best, cover_of(u));
    };
    consider(x);
    for (Vertex u : graph_.neighbors(x)) consider(u);
    double charge = member_cost / best;
    if (spec_.allow_ones) charge = std::min(1.0, charge);
    bound += charge;
    if (branch_options < 0 || options < branch_options || (options == branch_options && best > branch_cover)) {
      branch = x;
      branch_options = options;
      branch_cover = best;
    }
  });
  if (static_cast<std::size_t>(std::ceil(bound - 1e-9)) > cap) return false;

  std::vector<Vertex> candidates;
  if (test(al, branch)) candidates.push_back(branch);
  for (Vertex u : graph_.neighbors(branch))
    if (test(al, u)) candidates.push_back(u);
  std::sort(candidates.begin(), candidates.end(), [&](Vertex a, Vertex b) {
    return cover_of(a) != cover_of(b) ? cover_of(a) > cover_of(b) : a < b;
  });

  // Child i puts candidates[i] into S and bars candidates[0..i) from it; the
  // final child (Roman only) bars all of them, so `branch` pays 1.
  children.reserve(candidates.size() + 1);
  for (Vertex u : candidates) {
    Node child = node;
    set(chosen(child), u);
    clear(allowed(child), u);
    const Word64* row = closed(u);
    Word64* child_dom = dominated(child);
    for (std::size_t w = 0; w < words_; ++w) child_dom[w] |= row[w];
    ++child.chosen_count;
    children.push_back(std::move(child));
    clear(al, u);
  }
  if (spec_.allow_ones) children.push_back(std::move(node));
  return true;
}

Solution SearchContext::greedy(Node node) const {
  const Word64 tail_mask = (n_ % 64 == 0) ? ~Word64{0} : ((Word64{1} << (n_ % 64)) - 1);
  std::vector<Word64> open(words_);
  while (true) {
    for (std::size_t w = 0; w < words_; ++w) open[w] = ~dominated(node)[w] & ~ones(node)[w];
    open[words_ - 1] &= tail_mask;
    int best = 0;
    Vertex pick = 0;
    for (Vertex u = 0; u < n_; ++u) {
      if (!test(allowed(node), u)) continue;
      const Word64* row = closed(u);
      int c = 0;
      for (std::size_t w = 0; w < words_; ++w) c += std::popcount(row[w] & open[w]);
      if (c > best) {
        best = c;
        pick = u;
      }
    }
    const bool pay_ones = spec_.allow_ones && static_cast<std::size_t>(best) <= spec_.member_cost;
    if (best == 0 || pay_ones) {
      // Whatever is still open pays 1. Only reached with allow_ones, or when
      // nothing is open (domination on a feasible root).
      for_each_bit(open.data(), words_, [&](Vertex x) {
        set(ones(node), x);
        ++node.ones_count;
      });
      return to_solution(node);
    }
    set(chosen(node), pick);
    clear(allowed(node), pick);
    const Word64* row = closed(pick);
    for (std::size_t w = 0; w < words_; ++w) dominated(node)[w] |= row[w];
    ++node.chosen_count;
  }
}

}  // namespace sroman::detail
