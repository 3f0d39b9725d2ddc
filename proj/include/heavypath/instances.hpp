#pragma once

// Named fixtures and generators of 2-connected weighted graphs.

#include "heavypath/conditions.hpp"
#include "heavypath/graph.hpp"
#include "heavypath/oracle.hpp"

#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace heavypath {

/// One machine-checkable claim about a fixture.
struct ExpectedProperty {
  std::string description;
  std::function<bool(const WeightedGraph&)> check;
};

struct Fixture {
  std::string name;
  std::string parameters;
  WeightedGraph graph;
  std::vector<Vertex> anchors;  // x, then y when the fixture has one
  std::vector<ExpectedProperty> expected;
};

struct PropertyResult {
  std::string description;
  bool passed;
};

inline std::vector<PropertyResult> check_fixture(const Fixture& f) {
  std::vector<PropertyResult> out;
  for (const auto& p : f.expected) out.push_back({p.description, p.check(f.graph)});
  return out;
}

namespace fig1_ids {
inline constexpr Vertex x = 0, y = 1, u1 = 2, u2 = 3, u3 = 4, u4 = 5;
}

/// Six-vertex graph whose distance-two pairs all reach max weighted degree 5
/// while no (x,y)-path reaches weight 5 and none is Hamilton.
inline WeightedGraph fig1_graph() {
  using namespace fig1_ids;
  WeightedGraph g(6);
  for (auto [u, v] : {std::pair{x, u1}, {y, u1}, {x, u2}, {x, u3}, {y, u2}, {y, u3}, {u2, u4},
                      {u3, u4}})
    g.add_edge(u, v, Rational(1));
  g.add_edge(u2, u3, Rational(2));
  return g;
}

inline Fixture fig1() {
  using namespace fig1_ids;
  Fixture f{"fig1", "", fig1_graph(), {x, y}, {}};
  const Vertex xy[] = {x, y};
  f.expected = {
      {"2-connected", [](const WeightedGraph& g) { return is_two_connected(g); }},
      {"d*(PairMaxDist2, {x,y}) = 5",
       [xy](const WeightedGraph& g) {
         return d_star(g, ConditionKind::PairMaxDist2, xy).d_star == ExtendedRational(5);
       }},
      {"hypothesis with distance-two pairs holds at d = 5",
       [xy](const WeightedGraph& g) {
         return hypothesis_holds(g, ConditionKind::PairMaxDist2, xy, Rational(5));
       }},
      {"heaviest (x,y)-path weighs 4",
       [](const WeightedGraph& g) {
         auto p = heaviest_xy_path(g, x, y);
         return p && p->weight == Rational(4);
       }},
      {"no Hamilton (x,y)-path",
       [](const WeightedGraph& g) { return !hamilton_xy_path(g, x, y).has_value(); }},
  };
  return f;
}

/// Complete parts of the given sizes glued along x = 0 and y = 1, all
/// weights 0. Part i contributes sizes[i] - 2 private vertices.
inline WeightedGraph cliques_sharing_pair(const std::vector<int>& sizes) {
  int n = 2;
  for (int s : sizes) {
    if (s < 3) throw Error("every complete part needs at least three vertices");
    n += s - 2;
  }
  if (n > kMaxVertexIds) throw Error("fixture too large");
  WeightedGraph g(n);
  g.add_edge(0, 1, Rational(0));
  Vertex next = 2;
  for (int s : sizes) {
    std::vector<Vertex> part = {0, 1};
    for (int i = 0; i < s - 2; ++i) part.push_back(next++);
    for (std::size_t i = 0; i < part.size(); ++i)
      for (std::size_t j = i + 1; j < part.size(); ++j)
        g.add_edge_if_absent(part[i], part[j], Rational(0), false);
  }
  return g;
}

/// Two zero-weight complete graphs sharing x and y: the averaged three-vertex
/// condition is vacuous, yet neither a heavy nor a Hamilton (x,y)-path exists.
inline Fixture two_cliques(int p, int q) {
  Fixture f{"two-cliques", std::to_string(p) + "," + std::to_string(q),
            cliques_sharing_pair({p, q}), {0, 1}, {}};
  const Vertex xy[] = {0, 1};
  f.expected = {
      {"2-connected", [](const WeightedGraph& g) { return is_two_connected(g); }},
      {"d*(TripleSum, {x,y}) = inf",
       [xy](const WeightedGraph& g) {
         return d_star(g, ConditionKind::TripleSum, xy).d_star.is_infinite();
       }},
      {"heaviest (x,y)-path weighs 0",
       [](const WeightedGraph& g) {
         auto p = heaviest_xy_path(g, 0, 1);
         return p && p->weight == Rational(0);
       }},
      {"no Hamilton (x,y)-path",
       [](const WeightedGraph& g) { return !hamilton_xy_path(g, 0, 1).has_value(); }},
      {"spanning disjoint x-path/y-path pair exists",
       [](const WeightedGraph& g) { return spanning_disjoint_pair(g, 0, 1).has_value(); }},
  };
  return f;
}

/// Three zero-weight complete graphs sharing x and y: the averaged four-vertex
/// condition on V - {x} is vacuous, yet no x-path is heavy or Hamilton.
inline Fixture three_cliques(int p, int q, int r) {
  Fixture f{"three-cliques",
            std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r),
            cliques_sharing_pair({p, q, r}), {0}, {}};
  const Vertex xs[] = {0};
  f.expected = {
      {"2-connected", [](const WeightedGraph& g) { return is_two_connected(g); }},
      {"d*(QuadSum, {x}) = inf",
       [xs](const WeightedGraph& g) {
         return d_star(g, ConditionKind::QuadSum, xs).d_star.is_infinite();
       }},
      {"heaviest x-path weighs 0",
       [](const WeightedGraph& g) { return heaviest_x_path(g, 0).weight == Rational(0); }},
      {"no Hamilton x-path",
       [](const WeightedGraph& g) { return !hamilton_x_path(g, 0).has_value(); }},
  };
  return f;
}

inline std::vector<std::string> fixture_names() { return {"fig1", "two-cliques", "three-cliques"}; }

/// Builds a fixture by name; `sizes` overrides the default part sizes.
inline Fixture make_fixture(const std::string& name, const std::vector<int>& sizes = {}) {
  if (name == "fig1") {
    if (!sizes.empty()) throw Error("fig1 takes no size parameters");
    return fig1();
  }
  if (name == "two-cliques") {
    if (sizes.empty()) return two_cliques(4, 4);
    if (sizes.size() != 2) throw Error("two-cliques takes two part sizes");
    return two_cliques(sizes[0], sizes[1]);
  }
  if (name == "three-cliques") {
    if (sizes.empty()) return three_cliques(3, 3, 3);
    if (sizes.size() != 3) throw Error("three-cliques takes three part sizes");
    return three_cliques(sizes[0], sizes[1], sizes[2]);
  }
  throw Error("unknown fixture '" + name + "'");
}

inline constexpr double kDefaultEnumerationCap = 4.0e9;

/// Every labeled 2-connected graph on n vertices, with every assignment of
/// weights from `weights` to its edges. Order: edge subsets by increasing
/// bitmask over the pairs (0,1),(0,2),...,(n-2,n-1); weightings in
/// lexicographic order of weight indices, first edge slowest.
class TwoConnectedEnumeration {
 public:
  TwoConnectedEnumeration(int n, std::vector<Rational> weights,
                          double cap = kDefaultEnumerationCap)
      : n_(n), weights_(std::move(weights)) {
    if (n < 3 || n > 7) throw Error("enumeration supports 3 <= n <= 7");
    if (weights_.empty()) throw Error("weight set must not be empty");
    for (const auto& w : weights_)
      if (w < 0) throw Error("weights must be non-negative");
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) pairs_.emplace_back(u, v);
    const double bound = std::pow(2.0, static_cast<double>(pairs_.size())) *
                         std::pow(static_cast<double>(weights_.size()),
                                  static_cast<double>(pairs_.size()));
    if (bound > cap)
      throw Error("enumeration bound " + std::to_string(bound) + " exceeds cap");
  }

  /// Calls f(graph) for every instance; stops early when f returns false.
  template <class F>
  void for_each(F&& f) const {
    const std::uint32_t subsets = std::uint32_t{1} << pairs_.size();
    for (std::uint32_t s = 0; s < subsets; ++s) {
      WeightedGraph shape(n_);
      std::vector<std::pair<Vertex, Vertex>> used;
      for (std::size_t i = 0; i < pairs_.size(); ++i)
        if (s >> i & 1u) {
          shape.add_edge(pairs_[i].first, pairs_[i].second, weights_[0]);
          used.push_back(pairs_[i]);
        }
      if (!is_two_connected(shape)) continue;
      std::vector<std::size_t> idx(used.size(), 0);
      while (true) {
        WeightedGraph g = shape;
        for (std::size_t i = 0; i < used.size(); ++i)
          g.set_weight(used[i].first, used[i].second, weights_[idx[i]]);
        if (!f(std::as_const(g))) return;
        std::size_t k = used.size();
        while (k > 0 && ++idx[k - 1] == weights_.size()) idx[--k] = 0;
        if (k == 0) break;
      }
    }
  }

  std::vector<WeightedGraph> collect() const {
    std::vector<WeightedGraph> out;
    for_each([&](const WeightedGraph& g) {
      out.push_back(g);
      return true;
    });
    return out;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for_each([&](const WeightedGraph&) {
      ++c;
      return true;
    });
    return c;
  }

 private:
  int n_;
  std::vector<Rational> weights_;
  std::vector<std::pair<Vertex, Vertex>> pairs_;
};

struct RandomGraphOptions {
  int n = 6;
  std::int64_t min_weight = 0;
  std::int64_t max_weight = 10;
  int max_attempts = 10000;
};

/// Seeded generate-and-test draw; the edge probability cycles through a
/// fixed schedule across attempts.
inline WeightedGraph random_two_connected(const RandomGraphOptions& opt, std::uint64_t seed) {
  if (opt.n < 3 || opt.n > kMaxVertexIds) throw Error("random graphs need 3 <= n <= 64");
  if (opt.min_weight < 0 || opt.max_weight < opt.min_weight)
    throw Error("invalid weight range");
  static constexpr double kSchedule[] = {0.35, 0.5, 0.65, 0.8};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> weight(opt.min_weight, opt.max_weight);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int attempt = 0; attempt < opt.max_attempts; ++attempt) {
    const double p = kSchedule[attempt % std::size(kSchedule)];
    WeightedGraph g(opt.n);
    for (Vertex u = 0; u < opt.n; ++u)
      for (Vertex v = u + 1; v < opt.n; ++v)
        if (coin(rng) < p) g.add_edge(u, v, Rational(weight(rng)));
    if (is_two_connected(g)) return g;
  }
  throw Error("random_two_connected: retry budget exhausted");
}

inline WeightedGraph random_two_connected(int n, std::int64_t min_weight, std::int64_t max_weight,
                                          std::uint64_t seed) {
  return random_two_connected(RandomGraphOptions{n, min_weight, max_weight}, seed);
}

}  // namespace heavypath
