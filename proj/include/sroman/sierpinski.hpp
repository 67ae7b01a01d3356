#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "sroman/graph.hpp"

namespace sroman {

inline constexpr std::size_t kDefaultVertexBudget = 200'000;

/// Vertex budget for S(G,t); SROMAN_VERTEX_BUDGET overrides the default.
std::size_t vertex_budget();

/// A word u1 u2 ... ut over the base vertex set. Compared lexicographically.
struct Word {
  std::vector<Vertex> letters;

  std::size_t length() const { return letters.size(); }
  Word prefix(std::size_t len) const;
  Word operator+(const Word& other) const;
  Word operator+(Vertex letter) const;

  /// x repeated `count` times.
  static Word constant(Vertex x, std::size_t count);

  auto operator<=>(const Word&) const = default;
};

/// Letters joined without separators when the alphabet has at most 10
/// letters ("102"), otherwise joined with '.' ("10.2.11").
std::string format_word(const Word& w, std::size_t alphabet_size);
Word parse_word(std::string_view text, std::size_t alphabet_size);

/// Generalized Sierpiński graph S(G,t) with its word <-> vertex id bijection.
///
/// Vertex ids follow lexicographic word order, i.e. a word is read as a
/// base-n numeral with the first letter most significant. The copy
/// <V_w> = {wx : x in V} for a prefix w of length t-1 therefore occupies the
/// id range [id(w)*n, id(w)*n + n).
class SierpinskiGraph {
 public:
  /// Throws InputError for t = 0 or a base of order < 2, ResourceError when
  /// n^t exceeds `budget`.
  static SierpinskiGraph build(const Graph& base, std::size_t depth,
                               std::size_t budget = vertex_budget());

  const Graph& base() const { return base_; }
  const Graph& graph() const { return graph_; }
  std::size_t depth() const { return depth_; }
  std::size_t base_order() const { return base_.order(); }
  std::size_t order() const { return graph_.order(); }

  Vertex vertex_of(const Word& w) const;
  Word word_of(Vertex v) const;
  std::string word_label(Vertex v) const { return graph_.label(v); }
  Vertex vertex_of_label(std::string_view label) const;

  /// Last letter of the word of v.
  Vertex last_letter(Vertex v) const { return v % static_cast<Vertex>(base_order()); }

  /// The n constant words xx...x.
  VertexSet extreme_vertices() const;

  /// Number of copies <V_w> with |w| = t-1, i.e. n^{t-1}.
  std::size_t copy_count() const { return order() / base_order(); }

  /// Copy index of the prefix w (|w| = t-1), equal to id(w) over V^{t-1}.
  std::size_t copy_index(const Word& prefix) const;

  /// V_w for |w| = t-1. Throws InputError on a wrong length or t = 1.
  VertexSet copy_vertices(const Word& prefix) const;
  VertexSet copy_vertices(std::size_t copy) const;

  /// All words beginning with `prefix`, for any prefix length 0..t-1. The
  /// induced subgraph is isomorphic to S(G, t-|prefix|).
  VertexSet block_vertices(const Word& prefix) const;

  /// The unique vertex w'xx...x of V_w, i.e. w followed by its own last letter.
  Vertex copy_extreme_vertex(const Word& prefix) const;
  Vertex copy_extreme_vertex(std::size_t copy) const;

 private:
  Graph base_;
  Graph graph_;
  std::size_t depth_ = 0;
};

/// Every edge leaving a copy V_w starts at the copy's extreme vertex or at a
/// neighbour of it inside the copy.
bool check_boundary_adjacency(const SierpinskiGraph& s);

}  // namespace sroman
