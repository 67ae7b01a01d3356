#include "sroman/graph_io.hpp"

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <regex>
#include <sstream>

#include "sroman/errors.hpp"

namespace sroman {

namespace {

std::string escape_dot(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

std::string unescape_dot(const std::string& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '\\' && i + 1 < s.size()) ++i;
    out.push_back(s[i]);
  }
  return out;
}

const char* roman_colour(int label) {
  switch (label) {
    case 1: return "lightblue";
    case 2: return "tomato";
    default: return "white";
  }
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  long long n = 0, m = 0;
  if (!(in >> n >> m)) throw InputError("edge list: missing `n m` header");
  if (n <= 0 || m < 0) throw InputError("edge list: header must have n > 0 and m >= 0");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u = 0, v = 0;
    if (!(in >> u >> v)) throw InputError("edge list: expected " + std::to_string(m) + " edges, read " + std::to_string(i));
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw InputError("edge list: edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return Graph::from_edge_list(static_cast<std::size_t>(n), edges);
}

Graph read_edge_list_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

void write_dot(std::ostream& out, const Graph& g, const DotOptions& options) {
  if (!options.roman_labels.empty() && options.roman_labels.size() != g.order())
    throw InputError("DOT export: label vector does not match graph order");
  out << "graph " << options.name << " {\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    out << "  " << v << " [label=\"" << escape_dot(g.label(v)) << '"';
    if (!options.roman_labels.empty()) {
      out << ", style=filled, fillcolor=" << roman_colour(options.roman_labels[v])
          << ", xlabel=\"" << options.roman_labels[v] << '"';
    }
    out << "];\n";
  }
  for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
}

std::string to_dot(const Graph& g, const DotOptions& options) {
  std::ostringstream out;
  write_dot(out, g, options);
  return out.str();
}

Graph read_dot(std::istream& in) {
  static const std::regex node_re(R"re(^\s*(\d+)\s*\[label="((?:[^"\\]|\\.)*)".*\];\s*$)re");
  static const std::regex edge_re(R"(^\s*(\d+)\s*--\s*(\d+)\s*;\s*$)");
  std::string line;
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  bool header = false;
  while (std::getline(in, line)) {
    std::smatch m;
    if (!header) {
      if (line.rfind("graph ", 0) == 0) header = true;
      continue;
    }
    if (std::regex_match(line, m, node_re)) {
      auto id = std::stoul(m[1].str());
      if (id != labels.size()) throw InputError("DOT: node statements must be numbered 0..n-1 in order");
      labels.push_back(unescape_dot(m[2].str()));
    } else if (std::regex_match(line, m, edge_re)) {
      edges.emplace_back(static_cast<Vertex>(std::stoul(m[1].str())), static_cast<Vertex>(std::stoul(m[2].str())));
    } else if (line.find('}') != std::string::npos) {
      break;
    } else if (!line.empty()) {
      throw InputError("DOT: unrecognised line: " + line);
    }
  }
  if (!header) throw InputError("DOT: missing `graph` header");
  bool plain = true;
  for (std::size_t i = 0; i < labels.size(); ++i) plain = plain && labels[i] == std::to_string(i);
  return Graph::from_edge_list(labels.size(), edges, plain ? std::vector<std::string>{} : labels);
}

std::string graph_hash(const Graph& g) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : to_edge_list(g)) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

}  // namespace sroman
