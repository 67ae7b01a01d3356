#include "sroman/sierpinski.hpp"

#include <cstdlib>
#include <limits>

#include "sroman/errors.hpp"

namespace sroman {

static std::string order_text(std::size_t n, std::size_t t) {
  unsigned __int128 x = 1;
  for (std::size_t i = 0; i < t; ++i) {
    x *= n;
    if (x > std::numeric_limits<std::uint64_t>::max()) return "more than 2^64";
  }
  return std::to_string(static_cast<std::uint64_t>(x));
}

std::size_t vertex_budget() {
  if (const char* env = std::getenv("SROMAN_VERTEX_BUDGET")) {
    char* end = nullptr;
    unsigned long long value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return static_cast<std::size_t>(value);
  }
  return kDefaultVertexBudget;
}

Word Word::prefix(std::size_t len) const {
  if (len > letters.size()) throw InputError("prefix longer than word");
  return Word{{letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(len)}};
}

Word Word::operator+(const Word& other) const {
  Word out = *this;
  out.letters.insert(out.letters.end(), other.letters.begin(), other.letters.end());
  return out;
}

Word Word::operator+(Vertex letter) const {
  Word out = *this;
  out.letters.push_back(letter);
  return out;
}

Word Word::constant(Vertex x, std::size_t count) { return Word{std::vector<Vertex>(count, x)}; }

std::string format_word(const Word& w, std::size_t alphabet_size) {
  std::string out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (alphabet_size > 10 && i > 0) out.push_back('.');
    out += std::to_string(w.letters[i]);
  }
  return out;
}

Word parse_word(std::string_view text, std::size_t alphabet_size) {
  Word w;
  auto push = [&](unsigned long letter) {
    if (letter >= alphabet_size)
      throw InputError("letter " + std::to_string(letter) + " outside alphabet of size " + std::to_string(alphabet_size));
    w.letters.push_back(static_cast<Vertex>(letter));
  };
  if (alphabet_size <= 10) {
    for (char c : text) {
      if (c < '0' || c > '9') throw InputError("bad word '" + std::string(text) + "'");
      push(static_cast<unsigned long>(c - '0'));
    }
  } else {
    std::size_t start = 0;
    while (start <= text.size()) {
      auto dot = text.find('.', start);
      auto piece = text.substr(start, dot == std::string_view::npos ? std::string_view::npos : dot - start);
      if (piece.empty()) throw InputError("bad word '" + std::string(text) + "'");
      for (char c : piece)
        if (c < '0' || c > '9') throw InputError("bad word '" + std::string(text) + "'");
      push(std::stoul(std::string(piece)));
      if (dot == std::string_view::npos) break;
      start = dot + 1;
    }
  }
  if (w.letters.empty()) throw InputError("empty word");
  return w;
}

SierpinskiGraph SierpinskiGraph::build(const Graph& base, std::size_t depth, std::size_t budget) {
  if (depth == 0) throw InputError("Sierpinski depth t must be at least 1");
  const std::size_t n = base.order();
  if (n < 2) throw InputError("Sierpinski base graph needs order at least 2");

  // powers[r] = n^r, with the budget checked before each multiplication.
  std::vector<std::size_t> powers{1};
  for (std::size_t r = 1; r <= depth; ++r) {
    if (powers.back() > budget / n) {
      throw ResourceError("S(G,t) with n=" + std::to_string(n) + ", t=" + std::to_string(depth) + " has " +
                          order_text(n, depth) + " vertices, over the budget of " + std::to_string(budget));
    }
    powers.push_back(powers.back() * n);
  }
  const std::size_t order = powers[depth];
  if (order > std::numeric_limits<Vertex>::max()) throw ResourceError("vertex ids overflow");

  // repunit[r] = 1 + n + ... + n^{r-1}: id contribution of a constant run of length r.
  std::vector<std::size_t> repunit{0};
  for (std::size_t r = 1; r <= depth; ++r) repunit.push_back(repunit.back() * n + 1);

  std::vector<Edge> edges;
  edges.reserve(base.size() * repunit[depth]);
  // Edge {w a b^{r-1}, w b a^{r-1}} for every base edge {a,b}, r in 1..t, w in V^{t-r}.
  for (std::size_t r = 1; r <= depth; ++r) {
    for (std::size_t w = 0; w < powers[depth - r]; ++w) {
      const std::size_t offset = w * powers[r];
      for (const auto& [a, b] : base.edges()) {
        auto u = offset + a * powers[r - 1] + b * repunit[r - 1];
        auto v = offset + b * powers[r - 1] + a * repunit[r - 1];
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
      }
    }
  }

  std::vector<std::string> labels;
  labels.reserve(order);
  Word word{std::vector<Vertex>(depth, 0)};
  for (std::size_t id = 0; id < order; ++id) {
    labels.push_back(format_word(word, n));
    for (std::size_t pos = depth; pos-- > 0;) {
      if (++word.letters[pos] < n) break;
      word.letters[pos] = 0;
    }
  }

  SierpinskiGraph s;
  s.base_ = base;
  s.depth_ = depth;
  s.graph_ = Graph::from_edge_list(order, edges, std::move(labels));
  return s;
}

Vertex SierpinskiGraph::vertex_of(const Word& w) const {
  if (w.length() != depth_)
    throw InputError("word length " + std::to_string(w.length()) + " differs from depth " + std::to_string(depth_));
  std::size_t id = 0;
  for (Vertex x : w.letters) {
    if (x >= base_order()) throw InputError("letter outside the base vertex set");
    id = id * base_order() + x;
  }
  return static_cast<Vertex>(id);
}

Word SierpinskiGraph::word_of(Vertex v) const {
  graph_.check_vertex(v);
  Word w{std::vector<Vertex>(depth_)};
  std::size_t id = v;
  for (std::size_t pos = depth_; pos-- > 0;) {
    w.letters[pos] = static_cast<Vertex>(id % base_order());
    id /= base_order();
  }
  return w;
}

Vertex SierpinskiGraph::vertex_of_label(std::string_view label) const {
  return vertex_of(parse_word(label, base_order()));
}

VertexSet SierpinskiGraph::extreme_vertices() const {
  VertexSet out;
  for (Vertex x = 0; x < base_order(); ++x) out.push_back(vertex_of(Word::constant(x, depth_)));
  return out;
}

std::size_t SierpinskiGraph::copy_index(const Word& prefix) const {
  if (depth_ < 2) throw InputError("copies V_w need t >= 2");
  if (prefix.length() + 1 != depth_)
    throw InputError("copy prefix must have length t-1 = " + std::to_string(depth_ - 1));
  return vertex_of(prefix + Vertex{0}) / base_order();
}

VertexSet SierpinskiGraph::copy_vertices(const Word& prefix) const {
  return copy_vertices(copy_index(prefix));
}

VertexSet SierpinskiGraph::copy_vertices(std::size_t copy) const {
  if (copy >= copy_count()) throw InputError("copy index out of range");
  VertexSet out;
  for (std::size_t x = 0; x < base_order(); ++x) out.push_back(static_cast<Vertex>(copy * base_order() + x));
  return out;
}

VertexSet SierpinskiGraph::block_vertices(const Word& prefix) const {
  if (prefix.length() >= depth_) throw InputError("block prefix must be shorter than t");
  std::size_t block = 1;
  for (std::size_t i = prefix.length(); i < depth_; ++i) block *= base_order();
  std::size_t start = 0;
  for (Vertex x : prefix.letters) {
    if (x >= base_order()) throw InputError("letter outside the base vertex set");
    start = start * base_order() + x;
  }
  start *= block;
  VertexSet out(block);
  for (std::size_t i = 0; i < block; ++i) out[i] = static_cast<Vertex>(start + i);
  return out;
}

Vertex SierpinskiGraph::copy_extreme_vertex(const Word& prefix) const {
  return copy_extreme_vertex(copy_index(prefix));
}

Vertex SierpinskiGraph::copy_extreme_vertex(std::size_t copy) const {
  if (copy >= copy_count()) throw InputError("copy index out of range");
  return static_cast<Vertex>(copy * base_order() + copy % base_order());
}

bool check_boundary_adjacency(const SierpinskiGraph& s) {
  if (s.depth() < 2) throw InputError("boundary check needs t >= 2");
  const auto& g = s.graph();
  const auto n = s.base_order();
  for (Vertex u = 0; u < g.order(); ++u) {
    const std::size_t copy = u / n;
    const Vertex extreme = s.copy_extreme_vertex(copy);
    for (Vertex v : g.neighbors(u)) {
      if (v / n == copy) continue;
      if (u != extreme && !g.adjacent(u, extreme)) return false;
    }
  }
  return true;
}

}  // namespace sroman
