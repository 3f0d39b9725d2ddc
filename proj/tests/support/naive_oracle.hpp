#pragma once

// Reference implementations for tests: plain enumeration over every simple
// path with exact rational sums and no pruning, adjacency read straight from
// has_edge. Deliberately slow and simple.

#include "heavypath/graph.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

namespace naive {

using heavypath::Path;
using heavypath::Rational;
using heavypath::Vertex;
using heavypath::WeightedGraph;

/// Calls f(sequence, weight) for every simple path starting at `start` that
/// stays inside `allowed` (single-vertex path included).
inline void each_path_from(const WeightedGraph& g, Vertex start, const std::vector<bool>& allowed,
                           const std::function<void(const std::vector<Vertex>&, const Rational&)>& f) {
  std::vector<Vertex> seq{start};
  std::vector<bool> used(g.capacity(), false);
  used[start] = true;
  std::function<void(Rational)> rec = [&](Rational w) {
    f(seq, w);
    for (Vertex v : g.vertices()) {
      if (used[v] || !allowed[v] || !g.has_edge(seq.back(), v)) continue;
      const Rational step = g.weight(seq.back(), v);
      used[v] = true;
      seq.push_back(v);
      rec(w + step);
      seq.pop_back();
      used[v] = false;
    }
  };
  rec(Rational(0));
}

inline std::vector<bool> everything(const WeightedGraph& g) {
  std::vector<bool> a(g.capacity(), false);
  for (Vertex v : g.vertices()) a[v] = true;
  return a;
}

inline std::optional<Rational> heaviest_xy(const WeightedGraph& g, Vertex x, Vertex y) {
  std::optional<Rational> best;
  each_path_from(g, x, everything(g), [&](const std::vector<Vertex>& s, const Rational& w) {
    if (s.back() == y && (!best || w > *best)) best = w;
  });
  return best;
}

inline Rational heaviest_x(const WeightedGraph& g, Vertex x) {
  Rational best(0);
  each_path_from(g, x, everything(g), [&](const std::vector<Vertex>&, const Rational& w) {
    best = std::max(best, w);
  });
  return best;
}

inline Rational heaviest_any(const WeightedGraph& g) {
  Rational best(0);
  for (Vertex s : g.vertices()) best = std::max(best, heaviest_x(g, s));
  return best;
}

inline std::optional<Rational> heaviest_cycle(const WeightedGraph& g, int max_len = 1 << 20) {
  std::optional<Rational> best;
  for (Vertex s : g.vertices())
    each_path_from(g, s, everything(g), [&](const std::vector<Vertex>& seq, const Rational& w) {
      if (seq.size() >= 3 && static_cast<int>(seq.size()) <= max_len && g.has_edge(seq.back(), s)) {
        const Rational total = w + g.weight(seq.back(), s);
        if (!best || total > *best) best = total;
      }
    });
  return best;
}

inline bool hamilton_xy(const WeightedGraph& g, Vertex x, Vertex y) {
  bool found = false;
  const auto n = static_cast<std::size_t>(g.vertex_count());
  each_path_from(g, x, everything(g), [&](const std::vector<Vertex>& s, const Rational&) {
    if (s.size() == n && s.back() == y) found = true;
  });
  return found;
}

inline bool hamilton_x(const WeightedGraph& g, Vertex x) {
  bool found = false;
  const auto n = static_cast<std::size_t>(g.vertex_count());
  each_path_from(g, x, everything(g), [&](const std::vector<Vertex>& s, const Rational&) {
    if (s.size() == n) found = true;
  });
  return found;
}

inline bool hamilton_cycle(const WeightedGraph& g) {
  if (g.vertex_count() < 3) return false;
  const Vertex s = g.vertices().front();
  bool found = false;
  const auto n = static_cast<std::size_t>(g.vertex_count());
  each_path_from(g, s, everything(g), [&](const std::vector<Vertex>& seq, const Rational&) {
    if (seq.size() == n && g.has_edge(seq.back(), s)) found = true;
  });
  return found;
}

/// Best w(P1) + w(P2) over disjoint x-/y-paths, and whether a spanning pair exists.
struct PairSummary {
  Rational best{0};
  bool spanning = false;
};

inline PairSummary disjoint_pairs(const WeightedGraph& g, Vertex x, Vertex y) {
  PairSummary out;
  const auto n = static_cast<std::size_t>(g.vertex_count());
  auto all = everything(g);
  all[y] = false;
  each_path_from(g, x, all, [&](const std::vector<Vertex>& p1, const Rational& w1) {
    auto rest = everything(g);
    for (Vertex v : p1) rest[v] = false;
    each_path_from(g, y, rest, [&](const std::vector<Vertex>& p2, const Rational& w2) {
      out.best = std::max(out.best, w1 + w2);
      if (p1.size() + p2.size() == n) out.spanning = true;
    });
  });
  return out;
}

inline bool connected_without(const WeightedGraph& g, Vertex removed) {
  std::vector<Vertex> left;
  for (Vertex v : g.vertices())
    if (v != removed) left.push_back(v);
  if (left.empty()) return true;
  std::vector<bool> seen(g.capacity(), false);
  std::vector<Vertex> stack{left.front()};
  seen[left.front()] = true;
  std::size_t count = 0;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    ++count;
    for (Vertex v : left)
      if (!seen[v] && g.has_edge(u, v)) {
        seen[v] = true;
        stack.push_back(v);
      }
  }
  return count == left.size();
}

/// Cut vertices by removal and reachability.
inline std::vector<Vertex> cut_vertices(const WeightedGraph& g) {
  std::vector<Vertex> out;
  for (Vertex v : g.vertices())
    if (!connected_without(g, v)) out.push_back(v);
  return out;
}

inline bool two_connected(const WeightedGraph& g) {
  return g.vertex_count() >= 3 && connected_without(g, -1) && naive::cut_vertices(g).empty();
}

inline Rational degree(const WeightedGraph& g, Vertex v) {
  Rational s(0);
  for (Vertex u : g.vertices())
    if (g.has_edge(u, v)) s += g.weight(u, v);
  return s;
}

/// d* by brute force over all k-subsets; nullopt means +infinity.
/// mode: 0 min over singletons, 1 mean, 2 max. `dist2` switches the tuple
/// predicate to "pair at unweighted distance exactly 2".
inline std::optional<Rational> d_star(const WeightedGraph& g, int k, int mode,
                                      const std::vector<Vertex>& excluded, bool dist2 = false) {
  std::vector<Vertex> pool;
  for (Vertex v : g.vertices())
    if (std::find(excluded.begin(), excluded.end(), v) == excluded.end()) pool.push_back(v);
  std::optional<Rational> best;
  std::vector<int> pick(pool.size(), 0);
  std::fill(pick.end() - std::min<std::ptrdiff_t>(k, static_cast<std::ptrdiff_t>(pool.size())), pick.end(), 1);
  if (static_cast<int>(pool.size()) < k) return std::nullopt;
  do {
    std::vector<Vertex> t;
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (pick[i]) t.push_back(pool[i]);
    bool ok = true;
    if (dist2) {
      ok = !g.has_edge(t[0], t[1]);
      bool common = false;
      for (Vertex w : g.vertices())
        if (g.has_edge(t[0], w) && g.has_edge(w, t[1])) common = true;
      ok = ok && common;
    } else {
      for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = i + 1; j < t.size(); ++j)
          if (g.has_edge(t[i], t[j])) ok = false;
    }
    if (!ok) continue;
    Rational agg(0);
    if (mode == 1) {
      for (Vertex v : t) agg += degree(g, v);
      agg /= static_cast<std::int64_t>(k);
    } else {
      agg = degree(g, t[0]);
      for (Vertex v : t) agg = mode == 0 ? std::min(agg, degree(g, v)) : std::max(agg, degree(g, v));
    }
    if (!best || agg < *best) best = agg;
  } while (std::next_permutation(pick.begin(), pick.end()));
  return best;
}

}  // namespace naive
