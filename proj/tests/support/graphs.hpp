#pragma once

#include "heavypath/graph.hpp"

#include <initializer_list>
#include <tuple>

namespace testgraphs {

using heavypath::Rational;
using heavypath::Vertex;
using heavypath::WeightedGraph;

inline WeightedGraph from_edges(int n, std::initializer_list<std::tuple<Vertex, Vertex, int>> es) {
  WeightedGraph g(n);
  for (auto [u, v, w] : es) g.add_edge(u, v, Rational(w));
  return g;
}

inline WeightedGraph triangle(int a = 1, int b = 1, int c = 1) {
  return from_edges(3, {{0, 1, a}, {1, 2, b}, {0, 2, c}});
}

inline WeightedGraph path3() { return from_edges(3, {{0, 1, 1}, {1, 2, 1}}); }

inline WeightedGraph complete(int n, int w = 1) {
  WeightedGraph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v, Rational(w));
  return g;
}

/// Hub 0, rim 1..n-1 in cycle order, all weights 1.
inline WeightedGraph wheel(int n) {
  WeightedGraph g(n);
  for (Vertex v = 1; v < n; ++v) {
    g.add_edge(0, v, Rational(1));
    g.add_edge(v, v == n - 1 ? 1 : v + 1, Rational(1));
  }
  return g;
}

/// Two triangles glued at vertex 0.
inline WeightedGraph bowtie() {
  return from_edges(5, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {0, 3, 1}, {3, 4, 1}, {0, 4, 1}});
}

}  // namespace testgraphs
