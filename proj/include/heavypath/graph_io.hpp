#pragma once

#include "heavypath/graph.hpp"

#include <fstream>
#include <istream>
#include <sstream>
#include <string>

namespace heavypath {

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Text format:
//   n            vertex count, vertices are 0..n-1
//   u v w        one edge per line, w a decimal or p/q
// Lines starting with '#' are comments; blank lines are ignored.
inline WeightedGraph parse_graph(std::istream& in) {
  std::string line;
  int line_no = 0;
  std::optional<WeightedGraph> g;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::string a, b, c, extra;
    if (!g) {
      fields >> a;
      if (fields >> extra) throw ParseError(line_no, "expected a single vertex count");
      int n = 0;
      try {
        std::size_t used = 0;
        n = std::stoi(a, &used);
        if (used != a.size()) throw std::invalid_argument(a);
      } catch (const std::exception&) {
        throw ParseError(line_no, "vertex count '" + a + "' is not an integer");
      }
      if (n < 0 || n > kMaxVertexIds)
        throw ParseError(line_no, "vertex count " + std::to_string(n) + " out of range");
      g.emplace(n);
      continue;
    }
    if (!(fields >> a >> b >> c) || (fields >> extra))
      throw ParseError(line_no, "expected 'u v w'");
    auto vertex = [&](const std::string& s) {
      try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        if (!g->has_vertex(v)) throw ParseError(line_no, "vertex " + s + " out of range");
        return v;
      } catch (const ParseError&) {
        throw;
      } catch (const std::exception&) {
        throw ParseError(line_no, "vertex '" + s + "' is not an integer");
      }
    };
    Vertex u = vertex(a), v = vertex(b);
    if (u == v) throw ParseError(line_no, "loop at vertex " + a);
    if (g->has_edge(u, v))
      throw ParseError(line_no, "duplicate edge " + WeightedGraph::pair_name(u, v));
    Rational w;
    try {
      w = parse_rational(c);
    } catch (const Error& e) {
      throw ParseError(line_no, e.what());
    }
    if (w < 0) throw ParseError(line_no, "negative weight " + c);
    g->add_edge(u, v, w);
  }
  if (!g) throw ParseError(line_no, "missing vertex count");
  return *std::move(g);
}

inline WeightedGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

inline WeightedGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open graph file '" + path + "'");
  return parse_graph(in);
}

/// Writes the text format. Ids must be dense (0..capacity-1 all present).
inline std::string format_graph(const WeightedGraph& g, const std::string& comment = {}) {
  if (g.vertex_count() != g.capacity())
    throw Error("format_graph: graph has holes in its vertex ids");
  std::ostringstream out;
  if (!comment.empty()) out << "# " << comment << '\n';
  out << g.capacity() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << ' ' << to_string(e.weight) << '\n';
  return out.str();
}

}  // namespace heavypath
