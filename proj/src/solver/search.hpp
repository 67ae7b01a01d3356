#pragma once

// Branch-and-bound over the set S of 2-labelled vertices (or dominating-set
// members). Shared by the serial reference driver and the OpenMP driver.

#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <mutex>
#include <optional>
#include <vector>

#include "sroman/graph.hpp"

namespace sroman::detail {

using Word64 = std::uint64_t;

struct SearchSpec {
  // Cost of one member of S: 2 for Roman domination, 1 for domination.
  std::size_t member_cost = 2;
  // Whether an undominated vertex may pay 1 instead (Roman domination).
  bool allow_ones = true;
};

/// One search state. The four bit sets are stored back to back.
struct Node {
  std::vector<Word64> bits;  // chosen | dominated | allowed | ones
  std::size_t chosen_count = 0;
  std::size_t ones_count = 0;
};

struct Solution {
  VertexSet chosen;
  std::size_t ones = 0;
  std::size_t weight = 0;
};

class SearchContext {
 public:
  using Clock = std::chrono::steady_clock;

  SearchContext(const Graph& g, SearchSpec spec, std::optional<Clock::time_point> deadline);

  std::size_t order() const { return n_; }
  std::size_t words() const { return words_; }
  const SearchSpec& spec() const { return spec_; }

  /// Root node with S = forced, and `excluded` barred from S.
  Node root(const VertexSet& forced, const VertexSet& excluded) const;

  /// Greedy completion of `node`; used to seed the incumbent.
  Solution greedy(Node node) const;

  /// Minimise weight (strict improvement over `cap`, an inclusive limit).
  void reset_optimize(std::size_t cap);
  /// Find any solution with weight <= weight_cap and ones <= ones_cap.
  void reset_decide(std::size_t weight_cap, std::size_t ones_cap);

  /// Applies forced moves and the bound. Returns false when the node is a
  /// leaf (recorded if feasible) or is pruned; otherwise fills `children`.
  bool expand(Node& node, std::vector<Node>& children);

  bool finished() const { return done_.load(std::memory_order_relaxed) || timed_out_.load(std::memory_order_relaxed); }
  bool timed_out() const { return timed_out_.load(); }
  std::optional<Solution> incumbent() const;
  void offer(const Solution& s);
  std::uint64_t nodes() const { return nodes_.load(); }

 private:
  Word64* chosen(Node& x) const { return x.bits.data(); }
  Word64* dominated(Node& x) const { return x.bits.data() + words_; }
  Word64* allowed(Node& x) const { return x.bits.data() + 2 * words_; }
  Word64* ones(Node& x) const { return x.bits.data() + 3 * words_; }
  const Word64* closed(Vertex v) const { return closed_.data() + v * words_; }

  bool accept(const Node& node, std::size_t weight);
  Solution to_solution(Node& node) const;

  const Graph& graph_;
  SearchSpec spec_;
  std::size_t n_;
  std::size_t words_;
  std::vector<Word64> closed_;
  std::optional<Clock::time_point> deadline_;

  std::atomic<std::size_t> weight_cap_{0};
  std::size_t ones_cap_ = 0;
  bool stop_on_first_ = false;
  std::atomic<bool> done_{false};
  std::atomic<bool> timed_out_{false};
  std::atomic<std::uint64_t> nodes_{0};

  mutable std::mutex mutex_;
  std::optional<Solution> incumbent_;
};

/// Reference depth-first driver.
void run_serial(SearchContext& ctx, Node root);

/// Same search with the upper levels of the tree explored as OpenMP tasks.
void run_parallel(SearchContext& ctx, Node root, int threads);

}  // namespace sroman::detail
