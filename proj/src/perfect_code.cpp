#include <algorithm>
#include <optional>

#include "sroman/constructions.hpp"
#include "sroman/errors.hpp"
#include "sroman/generators.hpp"

namespace sroman {

namespace {

// Exact cover of V by closed neighbourhoods. Always branches on the first
// uncovered vertex; in S(K_n,t) that choice is almost always forced.
class CodeSearch {
 public:
  explicit CodeSearch(const Graph& g) : g_(g), covered_(g.order(), 0), allowed_(g.order(), 1) {}

  void forbid(Vertex v) { allowed_[v] = 0; }

  std::optional<VertexSet> run(const VertexSet& required) {
    for (Vertex c : required) {
      if (!placeable(c)) return std::nullopt;
      place(c);
    }
    struct Frame {
      std::vector<Vertex> candidates;
      std::size_t next = 0;
      std::size_t scan = 0;
    };
    std::vector<Frame> stack;
    std::size_t scan = 0;
    while (true) {
      while (scan < covered_.size() && covered_[scan]) ++scan;
      if (scan == covered_.size()) break;
      Frame frame;
      frame.scan = scan;
      const auto x = static_cast<Vertex>(scan);
      frame.candidates.push_back(x);
      for (Vertex u : g_.neighbors(x)) frame.candidates.push_back(u);
      std::sort(frame.candidates.begin(), frame.candidates.end());
      stack.push_back(std::move(frame));

      // Advance the top frame to its next placeable candidate, unwinding
      // exhausted frames.
      while (true) {
        if (stack.empty()) return std::nullopt;
        Frame& top = stack.back();
        if (top.next > 0) unplace(top.candidates[top.next - 1]);
        while (top.next < top.candidates.size() && !placeable(top.candidates[top.next])) ++top.next;
        if (top.next < top.candidates.size()) {
          place(top.candidates[top.next]);
          ++top.next;
          scan = top.scan;
          break;
        }
        stack.pop_back();
      }
    }
    VertexSet code(required.begin(), required.end());
    for (const Frame& f : stack) code.push_back(f.candidates[f.next - 1]);
    std::sort(code.begin(), code.end());
    return code;
  }

 private:
  bool placeable(Vertex c) const {
    if (!allowed_[c] || covered_[c]) return false;
    auto nb = g_.neighbors(c);
    return std::none_of(nb.begin(), nb.end(), [&](Vertex u) { return covered_[u] != 0; });
  }
  void place(Vertex c) { set_cover(c, 1); }
  void unplace(Vertex c) { set_cover(c, 0); }
  void set_cover(Vertex c, char value) {
    covered_[c] = value;
    for (Vertex u : g_.neighbors(c)) covered_[u] = value;
  }

  const Graph& g_;
  std::vector<char> covered_;
  std::vector<char> allowed_;
};

}  // namespace

bool is_perfect_code(const Graph& g, const VertexSet& code) {
  std::vector<int> hits(g.order(), 0);
  for (Vertex c : code) {
    if (c >= g.order()) return false;
    ++hits[c];
    for (Vertex u : g.neighbors(c)) ++hits[u];
  }
  return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

VertexSet perfect_code_knt(std::size_t n, std::size_t t) {
  if (n < 2) throw InputError("S(K_n,t) needs n >= 2");
  auto s = SierpinskiGraph::build(complete_graph(n), t);
  const VertexSet extremes = s.extreme_vertices();
  CodeSearch search(s.graph());
  VertexSet required;
  if (t % 2 == 0) {
    required = extremes;
  } else {
    required.push_back(extremes.front());
    for (std::size_t i = 1; i < extremes.size(); ++i) search.forbid(extremes[i]);
  }
  auto code = search.run(required);
  if (!code) throw InternalError("no perfect code found for S(K_" + std::to_string(n) + "," + std::to_string(t) + ")");
  return *code;
}

}  // namespace sroman
