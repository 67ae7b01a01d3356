#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sroman/graph.hpp"
#include "sroman/sierpinski.hpp"

namespace sroman {

/// Total labelling V -> {0,1,2}, viewed as the partition (B0, B1, B2).
class RomanFunction {
 public:
  RomanFunction() = default;
  /// Throws InputError on a label outside {0,1,2}.
  explicit RomanFunction(std::vector<std::uint8_t> labels);

  /// 2 on `twos`, 1 on `ones`, 0 elsewhere. The two sets must be disjoint.
  static RomanFunction from_sets(std::size_t order, std::span<const Vertex> ones,
                                 std::span<const Vertex> twos);

  std::size_t order() const { return labels_.size(); }
  int operator[](Vertex v) const { return labels_[v]; }
  std::span<const std::uint8_t> labels() const { return labels_; }

  VertexSet preimage(int label) const;
  VertexSet b0() const { return preimage(0); }
  VertexSet b1() const { return preimage(1); }
  VertexSet b2() const { return preimage(2); }
  std::size_t count(int label) const;

  /// |B1| + 2|B2|.
  std::size_t weight() const;

  friend bool operator==(const RomanFunction&, const RomanFunction&) = default;

 private:
  std::vector<std::uint8_t> labels_;
};

std::size_t weight(const RomanFunction& f);

/// Every 0-labelled vertex has a 2-labelled neighbour. Throws InputError when
/// f is not defined on exactly the vertices of g.
bool is_roman_dominating(const RomanFunction& f, const Graph& g);

/// The sets the general upper bound for S(G,t) is built from.
struct DerivedSets {
  VertexSet d1;   // non-isolated vertices of <B1>
  VertexSet d2;   // non-isolated vertices of <B2>
  VertexSet d12;  // non-isolated vertices of <B1 u B2>
  // u in B1 \ D1 at distance 2 from some v in B2 with |N(v) n B0| = 2.
  VertexSet theta_vertices;
  std::size_t theta = 0;
  // v in B2 with |N(v) n B0| = 2 and at distance 2 from some u in B1 \ D1.
  VertexSet b2_prime;
};

/// Throws ContractError when f is not Roman dominating on g.
DerivedSets derived_sets(const RomanFunction& f, const Graph& g);

/// Weight bookkeeping for one copy <V_wu> of P_n inside S(P_n,t).
///
/// Letters are 0-based: A_wu holds the letters i <= u-2 and B_wu the letters
/// j >= u+2, so |A_wu| = max(0, u-1) and |B_wu| = max(0, n-2-u).
struct CopyProfile {
  std::size_t copy = 0;  // index of the prefix wu in V^{t-1}
  Vertex u = 0;          // last letter of the prefix
  std::size_t a_size = 0;
  std::size_t b_size = 0;
  std::size_t weight = 0;
  // weight - ceil(2|A|/3) - ceil(2|B|/3); may be negative for a non-optimal f.
  long long class_index = 0;
  // deg(wuu) != deg(u)
  bool in_lambda = false;

  /// 0, 1 or 2 (D2 collects every index >= 2); negative indices pass through.
  long long weight_class() const { return class_index >= 2 ? 2 : class_index; }
};

/// One record per copy, in copy order. Throws InputError unless the base of
/// `s` is the path 0-1-...-(n-1) with n >= 3 and t >= 2, ContractError when f
/// is not Roman dominating on S(P_n,t).
std::vector<CopyProfile> copy_weight_profile(const RomanFunction& f, const SierpinskiGraph& s);

/// Copies in class D0 for which no copy <V_w'v> with v adjacent to u in the
/// base path lies in D2. Empty when the pairing property holds.
std::vector<std::size_t> unpaired_d0_copies(const std::vector<CopyProfile>& profiles,
                                            const SierpinskiGraph& s);

}  // namespace sroman
