#pragma once

// Exact exhaustive searches for heaviest and Hamilton paths, cycles and
// disjoint path pairs. Every search enumerates vertex sequences in
// lexicographic order and only replaces its incumbent on a strict
// improvement, so among equal-weight optima the lexicographically smallest
// sequence is returned.

#include "heavypath/graph.hpp"

#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

namespace heavypath {

struct OracleBudget {
  int max_vertices = 12;
  std::optional<std::uint64_t> node_limit;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

struct WeightedPath {
  Rational weight;
  Path path;
};

struct WeightedCycle {
  Rational weight;
  Path cycle;  // closing edge back() -> front() is implicit
};

struct PathPair {
  Rational weight;
  Path first;   // starts at x
  Path second;  // starts at y
};

namespace detail {

/// Integer image of a graph: every weight multiplied by the lcm of the
/// denominators, so the inner loops add int64 values.
class ScaledGraph {
 public:
  ScaledGraph(const WeightedGraph& g, const OracleBudget& budget) : budget_(budget) {
    if (g.vertex_count() > budget.max_vertices)
      throw BudgetExceeded("oracle budget exceeded: " + std::to_string(g.vertex_count()) +
                           " vertices > max_vertices " + std::to_string(budget.max_vertices));
    cap_ = g.capacity();
    vertices_ = g.vertex_mask();
    adj_.assign(cap_, 0);
    w_.assign(static_cast<std::size_t>(cap_) * cap_, 0);
    max_incident_.assign(cap_, 0);
    const auto edges = g.edges();
    std::int64_t scale = 1;
    for (const Edge& e : edges) {
      std::int64_t den = e.weight.denominator();
      std::int64_t gcd = std::gcd(scale, den);
      if (__builtin_mul_overflow(scale / gcd, den, &scale))
        throw Error("weight denominators too large for exact search");
    }
    scale_ = scale;
    std::int64_t total = 0;
    for (const Edge& e : edges) {
      std::int64_t value = 0;
      if (__builtin_mul_overflow(e.weight.numerator(), scale / e.weight.denominator(), &value) ||
          __builtin_add_overflow(total, value, &total))
        throw Error("weights too large for exact search");
      adj_[e.u] |= bit(e.v);
      adj_[e.v] |= bit(e.u);
      w_[idx(e.u, e.v)] = w_[idx(e.v, e.u)] = value;
      max_incident_[e.u] = std::max(max_incident_[e.u], value);
      max_incident_[e.v] = std::max(max_incident_[e.v], value);
    }
    if (total > std::numeric_limits<std::int64_t>::max() / 4)
      throw Error("weights too large for exact search");
  }

  Mask vertices() const { return vertices_; }
  Mask adj(Vertex v) const { return adj_[v]; }
  std::int64_t w(Vertex u, Vertex v) const { return w_[idx(u, v)]; }
  Rational unscale(std::int64_t value) const { return Rational(value, scale_); }
  std::int64_t scale(const Rational& r) const {
    return r.numerator() * (scale_ / r.denominator());
  }

  std::int64_t bound(Mask region) const {
    std::int64_t total = 0;
    while (region) {
      total += max_incident_[std::countr_zero(region)];
      region &= region - 1;
    }
    return total;
  }

  Mask reach(Vertex start, Mask allowed) const {
    Mask seen = bit(start), frontier = seen;
    while (frontier) {
      Vertex v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      Mask fresh = adj_[v] & allowed & ~seen;
      seen |= fresh;
      frontier |= fresh;
    }
    return seen;
  }

  void tick() {
    if (budget_.node_limit && ++nodes_ > *budget_.node_limit)
      throw BudgetExceeded("oracle budget exceeded: node limit " +
                           std::to_string(*budget_.node_limit) + " reached");
  }

 private:
  std::size_t idx(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u) * cap_ + static_cast<std::size_t>(v);
  }

  OracleBudget budget_;
  std::uint64_t nodes_ = 0;
  int cap_ = 0;
  Mask vertices_ = 0;
  std::int64_t scale_ = 1;
  std::vector<Mask> adj_;
  std::vector<std::int64_t> w_;
  std::vector<std::int64_t> max_incident_;
};

/// Incumbent: best value so far (or "none"), plus its sequence.
struct Best {
  bool found = false;
  std::int64_t value = 0;
  std::vector<Vertex> seq;

  bool beaten_by(std::int64_t v) const { return !found || v > value; }
  bool hopeless(std::int64_t optimistic) const { return found && optimistic <= value; }
};

/// Heaviest path from seq.back() to `target` (or to anywhere when target < 0)
/// inside `allowed`, extending the current prefix `seq`.
class PathSearch {
 public:
  PathSearch(ScaledGraph& g, Mask allowed, Vertex target)
      : g_(g), allowed_(allowed), target_(target) {}

  void run(std::vector<Vertex>& seq, Mask visited, std::int64_t weight, std::int64_t offset,
           Best& best) {
    g_.tick();
    const Vertex tip = seq.back();
    if (target_ < 0 || tip == target_) {
      if (best.beaten_by(offset + weight)) {
        best.found = true;
        best.value = offset + weight;
        best.seq = seq;
      }
      if (tip == target_) return;
    }
    const Mask open = allowed_ & ~visited;
    const Mask region = g_.reach(tip, open | bit(tip)) & ~bit(tip);
    if (target_ >= 0 && !(region & bit(target_))) return;
    if (best.hopeless(offset + weight + g_.bound(region))) return;
    Mask next = g_.adj(tip) & open;
    while (next) {
      Vertex v = std::countr_zero(next);
      next &= next - 1;
      seq.push_back(v);
      run(seq, visited | bit(v), weight + g_.w(tip, v), offset, best);
      seq.pop_back();
    }
  }

 private:
  ScaledGraph& g_;
  Mask allowed_;
  Vertex target_;
};

inline void require_vertex(const WeightedGraph& g, Vertex v) { g.require_vertex(v); }

}  // namespace detail

/// Heaviest simple (x,y)-path; nullopt when x and y are disconnected.
inline std::optional<WeightedPath> heaviest_xy_path(const WeightedGraph& g, Vertex x, Vertex y,
                                                    const OracleBudget& budget = {}) {
  g.require_vertex(x);
  g.require_vertex(y);
  if (x == y) throw Error("heaviest_xy_path: anchors must differ");
  detail::ScaledGraph sg(g, budget);
  detail::Best best;
  std::vector<Vertex> seq{x};
  detail::PathSearch(sg, sg.vertices(), y).run(seq, bit(x), 0, 0, best);
  if (!best.found) return std::nullopt;
  return WeightedPath{sg.unscale(best.value), Path(best.seq)};
}

/// Heaviest path starting at x (the single vertex x counts, weight 0).
inline WeightedPath heaviest_x_path(const WeightedGraph& g, Vertex x,
                                    const OracleBudget& budget = {}) {
  g.require_vertex(x);
  detail::ScaledGraph sg(g, budget);
  detail::Best best;
  std::vector<Vertex> seq{x};
  detail::PathSearch(sg, sg.vertices(), -1).run(seq, bit(x), 0, 0, best);
  return WeightedPath{sg.unscale(best.value), Path(best.seq)};
}

/// Heaviest path anywhere in the graph.
inline WeightedPath heaviest_path(const WeightedGraph& g, const OracleBudget& budget = {}) {
  if (g.vertex_count() == 0) throw Error("heaviest_path: empty graph");
  detail::ScaledGraph sg(g, budget);
  detail::Best best;
  for (Vertex s : g.vertices()) {
    std::vector<Vertex> seq{s};
    detail::PathSearch(sg, sg.vertices(), -1).run(seq, bit(s), 0, 0, best);
  }
  return WeightedPath{sg.unscale(best.value), Path(best.seq)};
}

/// Heaviest cycle (at least 3 vertices, at most `max_length` when given).
/// The cycle is reported starting at its smallest vertex.
inline std::optional<WeightedCycle> heaviest_cycle(const WeightedGraph& g,
                                                   const OracleBudget& budget = {},
                                                   std::optional<int> max_length = std::nullopt) {
  detail::ScaledGraph sg(g, budget);
  detail::Best best;
  const int limit = max_length.value_or(g.vertex_count());
  for (Vertex s : g.vertices()) {
    const Mask above = sg.vertices() & ~((bit(s) << 1) - 1);
    std::vector<Vertex> seq{s};
    auto dfs = [&](auto&& self, Mask visited, std::int64_t weight) -> void {
      sg.tick();
      const Vertex tip = seq.back();
      if (seq.size() >= 3 && (sg.adj(tip) & bit(s)) && best.beaten_by(weight + sg.w(tip, s))) {
        best.found = true;
        best.value = weight + sg.w(tip, s);
        best.seq = seq;
      }
      if (static_cast<int>(seq.size()) >= limit) return;
      const Mask open = above & ~visited;
      const Mask region = sg.reach(tip, open | bit(tip)) & ~bit(tip);
      if (best.hopeless(weight + sg.bound(region | bit(s)))) return;
      Mask next = sg.adj(tip) & open;
      while (next) {
        Vertex v = std::countr_zero(next);
        next &= next - 1;
        seq.push_back(v);
        self(self, visited | bit(v), weight + sg.w(tip, v));
        seq.pop_back();
      }
    };
    dfs(dfs, bit(s), 0);
  }
  if (!best.found) return std::nullopt;
  return WeightedCycle{sg.unscale(best.value), Path(best.seq)};
}

namespace detail {

/// Spanning-path search. `last` is the required final vertex (or -1), and
/// `close_to` a vertex the final vertex must be adjacent to (or -1, cycles).
inline std::optional<Path> hamilton_search(const WeightedGraph& g, Vertex start, Vertex last,
                                           Vertex close_to, const OracleBudget& budget) {
  ScaledGraph sg(g, budget);
  const Mask all = sg.vertices();
  std::vector<Vertex> seq{start};
  std::optional<Path> found;
  auto dfs = [&](auto&& self, Mask visited) -> bool {
    sg.tick();
    const Vertex tip = seq.back();
    if (visited == all) {
      if (last >= 0 && tip != last) return false;
      if (close_to >= 0 && !(sg.adj(tip) & bit(close_to))) return false;
      found = Path(seq);
      return true;
    }
    if (tip == last) return false;
    const Mask open = all & ~visited;
    if ((sg.reach(tip, open | bit(tip)) | visited) != all) return false;
    // Degree pruning: an unvisited vertex with fewer than two usable
    // neighbours has to be the final vertex.
    int dead_ends = 0;
    Mask scan = open;
    while (scan) {
      Vertex v = std::countr_zero(scan);
      scan &= scan - 1;
      Mask usable = sg.adj(v) & (open | bit(tip));
      if (close_to >= 0) usable |= sg.adj(v) & bit(close_to);
      if (std::popcount(usable) < 2) {
        if (last >= 0 && v != last) return false;
        if (close_to >= 0 && tip != close_to) return false;
        if (++dead_ends > 1) return false;
      }
    }
    Mask next = sg.adj(tip) & open;
    while (next) {
      Vertex v = std::countr_zero(next);
      next &= next - 1;
      seq.push_back(v);
      if (self(self, visited | bit(v))) return true;
      seq.pop_back();
    }
    return false;
  };
  dfs(dfs, bit(start));
  return found;
}

}  // namespace detail

/// Lexicographically first Hamilton (x,y)-path, or nullopt.
inline std::optional<Path> hamilton_xy_path(const WeightedGraph& g, Vertex x, Vertex y,
                                            const OracleBudget& budget = {}) {
  g.require_vertex(x);
  g.require_vertex(y);
  if (x == y) throw Error("hamilton_xy_path: anchors must differ");
  return detail::hamilton_search(g, x, y, -1, budget);
}

inline std::optional<Path> hamilton_x_path(const WeightedGraph& g, Vertex x,
                                           const OracleBudget& budget = {}) {
  g.require_vertex(x);
  return detail::hamilton_search(g, x, -1, -1, budget);
}

/// Any Hamilton path at all (tried from each start vertex in turn).
inline std::optional<Path> hamilton_path(const WeightedGraph& g, const OracleBudget& budget = {}) {
  for (Vertex s : g.vertices())
    if (auto p = detail::hamilton_search(g, s, -1, -1, budget)) return p;
  return std::nullopt;
}

/// Hamilton cycle starting at the smallest vertex; nullopt below 3 vertices.
inline std::optional<Path> hamilton_cycle(const WeightedGraph& g, const OracleBudget& budget = {}) {
  if (g.vertex_count() < 3) return std::nullopt;
  Vertex s = std::countr_zero(g.vertex_mask());
  return detail::hamilton_search(g, s, -1, s, budget);
}

/// Maximum of w(P1) + w(P2) over vertex-disjoint x-paths P1 and y-paths P2.
inline PathPair best_disjoint_pair(const WeightedGraph& g, Vertex x, Vertex y,
                                   const OracleBudget& budget = {}) {
  g.require_vertex(x);
  g.require_vertex(y);
  if (x == y) throw Error("best_disjoint_pair: anchors must differ");
  detail::ScaledGraph sg(g, budget);
  const Mask all = sg.vertices();
  detail::Best best;
  std::vector<Vertex> best_first;
  std::vector<Vertex> first{x};
  auto outer = [&](auto&& self, Mask visited, std::int64_t weight) -> void {
    sg.tick();
    if (best.hopeless(weight + sg.bound(all & ~visited & ~bit(y)))) return;
    // Heaviest y-path avoiding the current x-path, beating the incumbent.
    detail::Best inner = best;
    std::vector<Vertex> second{y};
    detail::PathSearch(sg, all & ~visited, -1).run(second, bit(y), 0, weight, inner);
    if (inner.found && (!best.found || inner.value > best.value)) {
      best = inner;
      best_first = first;
    }
    const Vertex tip = first.back();
    Mask next = sg.adj(tip) & all & ~visited & ~bit(y);
    while (next) {
      Vertex v = std::countr_zero(next);
      next &= next - 1;
      first.push_back(v);
      self(self, visited | bit(v), weight + sg.w(tip, v));
      first.pop_back();
    }
  };
  outer(outer, bit(x), 0);
  return PathPair{sg.unscale(best.value), Path(best_first), Path(best.seq)};
}

/// Disjoint x-path and y-path covering every vertex, or nullopt.
inline std::optional<PathPair> spanning_disjoint_pair(const WeightedGraph& g, Vertex x, Vertex y,
                                                      const OracleBudget& budget = {}) {
  g.require_vertex(x);
  g.require_vertex(y);
  if (x == y) throw Error("spanning_disjoint_pair: anchors must differ");
  detail::ScaledGraph sg(g, budget);
  const VertexSet ids = g.vertices();
  const int k = static_cast<int>(ids.size());
  std::vector<int> pos(g.capacity(), -1);
  for (int i = 0; i < k; ++i) pos[ids[i]] = i;
  auto compress = [&](Mask m) {
    std::uint32_t c = 0;
    for (Vertex v : mask_to_set(m)) c |= 1u << pos[v];
    return c;
  };
  std::vector<std::uint32_t> cadj(k);
  for (int i = 0; i < k; ++i) cadj[i] = compress(sg.adj(ids[i]));

  // ends[S] = set of vertices v such that some path from y covers exactly S
  // and ends at v.
  const int py = pos[y];
  std::vector<std::uint32_t> ends(std::size_t{1} << k, 0);
  ends[1u << py] = 1u << py;
  for (std::uint32_t s = 0; s < ends.size(); ++s) {
    if (!ends[s]) continue;
    sg.tick();
    std::uint32_t e = ends[s];
    while (e) {
      int v = std::countr_zero(e);
      e &= e - 1;
      std::uint32_t ext = cadj[v] & ~s;
      while (ext) {
        int u = std::countr_zero(ext);
        ext &= ext - 1;
        ends[s | (1u << u)] |= 1u << u;
      }
    }
  }
  auto second_path = [&](std::uint32_t s) {
    std::vector<Vertex> rev;
    int v = std::countr_zero(ends[s]);
    while (true) {
      rev.push_back(ids[v]);
      std::uint32_t prev_set = s & ~(1u << v);
      if (!prev_set) break;
      int u = std::countr_zero(ends[prev_set] & cadj[v]);
      s = prev_set;
      v = u;
    }
    return Path(std::vector<Vertex>(rev.rbegin(), rev.rend()));
  };

  const Mask all = sg.vertices();
  std::vector<Vertex> first{x};
  std::optional<PathPair> result;
  auto dfs = [&](auto&& self, Mask visited) -> bool {
    sg.tick();
    std::uint32_t rest = compress(all & ~visited);
    if (ends[rest]) {
      Path p1(first), p2 = second_path(rest);
      result = PathPair{weight_of(g, p1) + weight_of(g, p2), p1, p2};
      return true;
    }
    const Vertex tip = first.back();
    Mask next = sg.adj(tip) & all & ~visited & ~bit(y);
    while (next) {
      Vertex v = std::countr_zero(next);
      next &= next - 1;
      first.push_back(v);
      if (self(self, visited | bit(v))) return true;
      first.pop_back();
    }
    return false;
  };
  if (k > 24) throw BudgetExceeded("spanning_disjoint_pair: too many vertices for subset DP");
  dfs(dfs, bit(x));
  return result;
}

}  // namespace heavypath
