#pragma once

#include "heavypath/rational.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace heavypath {

using Vertex = int;
using VertexSet = std::vector<Vertex>;  // kept sorted ascending
using Mask = std::uint64_t;

/// Vertex ids live in [0, kMaxVertexIds); bitmask-based searches rely on it.
inline constexpr int kMaxVertexIds = 64;

inline Mask bit(Vertex v) { return Mask{1} << v; }

inline VertexSet mask_to_set(Mask m) {
  VertexSet out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

inline Mask set_to_mask(std::span<const Vertex> vs) {
  Mask m = 0;
  for (Vertex v : vs) m |= bit(v);
  return m;
}

struct Edge {
  Vertex u;
  Vertex v;
  Rational weight;
  bool auxiliary = false;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple undirected graph with exact non-negative weights.
///
/// Vertex ids are small integers below `capacity()`; a graph need not use all
/// of them (induced copies keep the ids of the host graph so witnesses lift
/// back without renaming). Gadget vertices and zero-weight edges introduced by
/// the constructive algorithms carry an auxiliary mark.
class WeightedGraph {
 public:
  WeightedGraph() = default;

  /// Graph on vertices 0..n-1 with no edges.
  explicit WeightedGraph(int n) {
    if (n < 0 || n > kMaxVertexIds)
      throw Error("vertex count " + std::to_string(n) + " outside [0, " +
                  std::to_string(kMaxVertexIds) + "]");
    resize(n);
    present_ = n == 64 ? ~Mask{0} : (bit(n) - 1);
  }

  int capacity() const { return capacity_; }
  int vertex_count() const { return std::popcount(present_); }
  Mask vertex_mask() const { return present_; }
  VertexSet vertices() const { return mask_to_set(present_); }
  bool has_vertex(Vertex v) const {
    return v >= 0 && v < capacity_ && (present_ & bit(v));
  }

  bool has_edge(Vertex u, Vertex v) const {
    return has_vertex(u) && has_vertex(v) && (adj_[u] & bit(v));
  }
  Mask neighbor_mask(Vertex v) const {
    require_vertex(v);
    return adj_[v];
  }
  VertexSet neighbors(Vertex v) const { return mask_to_set(neighbor_mask(v)); }
  int degree(Vertex v) const { return std::popcount(neighbor_mask(v)); }

  const Rational& weight(Vertex u, Vertex v) const {
    if (!has_edge(u, v)) throw missing_edge(u, v);
    return weights_[index(u, v)];
  }

  bool is_auxiliary_edge(Vertex u, Vertex v) const {
    return has_edge(u, v) && aux_edge_[index(u, v)];
  }
  bool is_auxiliary_vertex(Vertex v) const {
    return has_vertex(v) && aux_vertex_[v];
  }

  int edge_count() const {
    int m = 0;
    for (Vertex v : vertices()) m += std::popcount(adj_[v]);
    return m / 2;
  }

  /// Edges with u < v, sorted lexicographically.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u : vertices())
      for (Vertex v : mask_to_set(adj_[u] & ~((bit(u) << 1) - 1)))
        out.push_back({u, v, weights_[index(u, v)], aux_edge_[index(u, v)] != 0});
    return out;
  }

  /// Adds a new edge; loops, duplicates and negative weights are rejected.
  void add_edge(Vertex u, Vertex v, Rational w, bool auxiliary = false) {
    require_vertex(u);
    require_vertex(v);
    if (u == v) throw Error("loop at vertex " + std::to_string(u));
    if (w < 0)
      throw Error("negative weight " + to_string(w) + " on edge " + pair_name(u, v));
    if (adj_[u] & bit(v)) throw Error("duplicate edge " + pair_name(u, v));
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
    weights_[index(u, v)] = weights_[index(v, u)] = w;
    aux_edge_[index(u, v)] = aux_edge_[index(v, u)] = auxiliary;
  }

  /// Returns false (and leaves the graph unchanged) if the edge already exists.
  bool add_edge_if_absent(Vertex u, Vertex v, Rational w, bool mark_auxiliary) {
    if (has_edge(u, v)) return false;
    add_edge(u, v, w, mark_auxiliary);
    return true;
  }

  void remove_edge(Vertex u, Vertex v) {
    if (!has_edge(u, v)) throw missing_edge(u, v);
    adj_[u] &= ~bit(v);
    adj_[v] &= ~bit(u);
    aux_edge_[index(u, v)] = aux_edge_[index(v, u)] = false;
    weights_[index(u, v)] = weights_[index(v, u)] = Rational(0);
  }

  void set_weight(Vertex u, Vertex v, Rational w) {
    if (!has_edge(u, v)) throw missing_edge(u, v);
    if (w < 0) throw Error("negative weight on edge " + pair_name(u, v));
    weights_[index(u, v)] = weights_[index(v, u)] = w;
  }

  /// Appends a fresh marked vertex with id `capacity()` joined to both
  /// `attach` vertices by zero-weight marked edges.
  Vertex add_gadget_vertex(std::pair<Vertex, Vertex> attach) {
    require_vertex(attach.first);
    require_vertex(attach.second);
    if (attach.first == attach.second) throw Error("gadget attached twice to one vertex");
    if (capacity_ >= kMaxVertexIds) throw Error("no free vertex id for gadget");
    const Vertex fresh = capacity_;
    resize(capacity_ + 1);
    present_ |= bit(fresh);
    aux_vertex_[fresh] = true;
    add_edge(attach.first, fresh, Rational(0), true);
    add_edge(fresh, attach.second, Rational(0), true);
    return fresh;
  }

  /// Induced subgraph on `keep`; ids and marks are preserved.
  WeightedGraph induced_copy(Mask keep) const {
    if ((keep & ~present_) != 0) throw Error("induced_copy: vertex set not contained in graph");
    WeightedGraph out = *this;
    out.present_ = keep;
    for (Vertex v = 0; v < capacity_; ++v) {
      if (keep & bit(v)) {
        for (Vertex u : mask_to_set(out.adj_[v] & ~keep)) {
          out.weights_[index(u, v)] = out.weights_[index(v, u)] = Rational(0);
          out.aux_edge_[index(u, v)] = out.aux_edge_[index(v, u)] = false;
        }
        out.adj_[v] &= keep;
      } else {
        out.adj_[v] = 0;
        out.aux_vertex_[v] = false;
      }
    }
    return out;
  }
  WeightedGraph induced_copy(std::span<const Vertex> keep) const {
    return induced_copy(set_to_mask(keep));
  }

  WeightedGraph without_vertex(Vertex v) const {
    require_vertex(v);
    return induced_copy(present_ & ~bit(v));
  }

  bool has_auxiliary_elements() const {
    for (Vertex v : vertices()) {
      if (aux_vertex_[v]) return true;
      for (Vertex u : mask_to_set(adj_[v]))
        if (aux_edge_[index(u, v)]) return true;
    }
    return false;
  }

  /// Structural equality: same vertex set, edges and exact weights.
  friend bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
    return a.present_ == b.present_ && a.edges() == b.edges();
  }

  void require_vertex(Vertex v) const {
    if (!has_vertex(v)) throw Error("vertex " + std::to_string(v) + " not in graph");
  }

  static std::string pair_name(Vertex u, Vertex v) {
    return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
  }

 private:
  std::size_t index(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(capacity_) +
           static_cast<std::size_t>(v);
  }

  static Error missing_edge(Vertex u, Vertex v) {
    return Error("edge " + pair_name(u, v) + " not in graph");
  }

  void resize(int n) {
    std::vector<Rational> w(static_cast<std::size_t>(n) * n, Rational(0));
    std::vector<char> aux(static_cast<std::size_t>(n) * n, 0);
    for (Vertex u = 0; u < capacity_; ++u)
      for (Vertex v = 0; v < capacity_; ++v) {
        w[static_cast<std::size_t>(u) * n + v] = weights_[index(u, v)];
        aux[static_cast<std::size_t>(u) * n + v] = aux_edge_[index(u, v)];
      }
    weights_ = std::move(w);
    aux_edge_ = std::move(aux);
    adj_.resize(n, 0);
    aux_vertex_.resize(n, 0);
    capacity_ = n;
  }

  int capacity_ = 0;
  Mask present_ = 0;
  std::vector<Mask> adj_;
  std::vector<Rational> weights_;
  std::vector<char> aux_edge_;
  std::vector<char> aux_vertex_;
};

/// Ordered sequence of distinct vertices; a single vertex is a path of weight 0.
class Path {
 public:
  Path() = default;
  explicit Path(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {}
  Path(std::initializer_list<Vertex> vs) : vertices_(vs) {}

  const std::vector<Vertex>& vertices() const { return vertices_; }
  std::vector<Vertex>& vertices() { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }
  Vertex front() const { return vertices_.front(); }
  Vertex back() const { return vertices_.back(); }
  bool contains(Vertex v) const {
    return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end();
  }
  bool uses_edge(Vertex a, Vertex b) const {
    for (std::size_t i = 0; i + 1 < vertices_.size(); ++i)
      if ((vertices_[i] == a && vertices_[i + 1] == b) ||
          (vertices_[i] == b && vertices_[i + 1] == a))
        return true;
    return false;
  }
  Mask mask() const { return set_to_mask(vertices_); }

  Path reversed() const {
    return Path(std::vector<Vertex>(vertices_.rbegin(), vertices_.rend()));
  }

  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(vertices_[i]);
    }
    return out;
  }

  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path&, const Path&) = default;

 private:
  std::vector<Vertex> vertices_;
};

/// Sum of the weights of the given edges.
inline Rational weight_of(const WeightedGraph& g, std::span<const std::pair<Vertex, Vertex>> edges) {
  Rational total(0);
  for (auto [u, v] : edges) total += g.weight(u, v);
  return total;
}

inline Rational total_weight(const WeightedGraph& g) {
  Rational total(0);
  for (const Edge& e : g.edges()) total += e.weight;
  return total;
}

/// Weight of a path; throws if two consecutive vertices are not adjacent.
inline Rational weight_of(const WeightedGraph& g, const Path& p) {
  Rational total(0);
  const auto& vs = p.vertices();
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) total += g.weight(vs[i], vs[i + 1]);
  return total;
}

/// d^w(v), optionally restricted to neighbours inside `within`.
inline Rational weighted_degree(const WeightedGraph& g, Vertex v,
                                std::optional<Mask> within = std::nullopt) {
  Mask nbrs = g.neighbor_mask(v);
  if (within) nbrs &= *within;
  Rational total(0);
  for (Vertex u : mask_to_set(nbrs)) total += g.weight(u, v);
  return total;
}

/// Vertices reachable from `start` using only vertices in `allowed`.
inline Mask reachable_within(const WeightedGraph& g, Vertex start, Mask allowed) {
  if (!(allowed & bit(start))) return 0;
  Mask seen = bit(start);
  Mask frontier = seen;
  while (frontier) {
    Vertex v = std::countr_zero(frontier);
    frontier &= frontier - 1;
    Mask fresh = g.neighbor_mask(v) & allowed & ~seen;
    seen |= fresh;
    frontier |= fresh;
  }
  return seen;
}

inline bool is_connected(const WeightedGraph& g) {
  Mask all = g.vertex_mask();
  if (all == 0) return true;
  return reachable_within(g, std::countr_zero(all), all) == all;
}

/// Connected components of G - S, ordered by smallest contained id.
inline std::vector<VertexSet> components_after_removal(const WeightedGraph& g,
                                                       std::span<const Vertex> removed) {
  Mask removed_mask = set_to_mask(removed);
  if ((removed_mask & ~g.vertex_mask()) != 0)
    throw Error("components_after_removal: removed set not contained in graph");
  Mask rest = g.vertex_mask() & ~removed_mask;
  std::vector<VertexSet> out;
  while (rest) {
    Mask comp = reachable_within(g, std::countr_zero(rest), rest);
    out.push_back(mask_to_set(comp));
    rest &= ~comp;
  }
  return out;
}

/// Cut vertices of a connected graph (Tarjan low-link, one DFS pass).
inline VertexSet cut_vertices(const WeightedGraph& g) {
  if (!is_connected(g)) throw Error("cut_vertices: graph is disconnected");
  const int cap = g.capacity();
  std::vector<int> disc(cap, -1), low(cap, 0);
  Mask cuts = 0;
  int timer = 0;
  std::function<void(Vertex, Vertex)> dfs = [&](Vertex v, Vertex parent) {
    disc[v] = low[v] = timer++;
    int children = 0;
    for (Vertex u : g.neighbors(v)) {
      if (u == parent) continue;
      if (disc[u] >= 0) {
        low[v] = std::min(low[v], disc[u]);
        continue;
      }
      ++children;
      dfs(u, v);
      low[v] = std::min(low[v], low[u]);
      if (parent >= 0 && low[u] >= disc[v]) cuts |= bit(v);
    }
    if (parent < 0 && children > 1) cuts |= bit(v);
  };
  if (g.vertex_mask()) dfs(std::countr_zero(g.vertex_mask()), -1);
  return mask_to_set(cuts);
}

inline bool is_two_connected(const WeightedGraph& g) {
  return g.vertex_count() >= 3 && is_connected(g) && cut_vertices(g).empty();
}

/// Hop distance; nullopt when u and v lie in different components.
inline std::optional<int> unweighted_distance(const WeightedGraph& g, Vertex u, Vertex v) {
  g.require_vertex(u);
  g.require_vertex(v);
  Mask seen = bit(u), layer = bit(u);
  for (int dist = 0; layer; ++dist) {
    if (layer & bit(v)) return dist;
    Mask next = 0;
    for (Vertex w : mask_to_set(layer)) next |= g.neighbor_mask(w);
    next &= ~seen;
    seen |= next;
    layer = next;
  }
  return std::nullopt;
}

/// Shortest (fewest edges, then lexicographically smallest) path from u to v
/// through `allowed`; nullopt if none.
inline std::optional<Path> bfs_path(const WeightedGraph& g, Vertex u, Vertex v, Mask allowed) {
  if (!(allowed & bit(u)) || !(allowed & bit(v))) return std::nullopt;
  std::vector<Vertex> parent(g.capacity(), -1);
  std::vector<Vertex> queue{u};
  Mask seen = bit(u);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex w = queue[head];
    if (w == v) break;
    for (Vertex n : mask_to_set(g.neighbor_mask(w) & allowed & ~seen)) {
      seen |= bit(n);
      parent[n] = w;
      queue.push_back(n);
    }
  }
  if (!(seen & bit(v))) return std::nullopt;
  std::vector<Vertex> seq;
  for (Vertex w = v; w != -1; w = parent[w]) seq.push_back(w);
  std::reverse(seq.begin(), seq.end());
  return Path(std::move(seq));
}

/// True if `p` is a simple path of `g` (consecutive vertices adjacent).
inline bool is_simple_path(const WeightedGraph& g, const Path& p) {
  if (p.empty()) return false;
  Mask seen = 0;
  const auto& vs = p.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (!g.has_vertex(vs[i]) || (seen & bit(vs[i]))) return false;
    seen |= bit(vs[i]);
    if (i && !g.has_edge(vs[i - 1], vs[i])) return false;
  }
  return true;
}

}  // namespace heavypath
