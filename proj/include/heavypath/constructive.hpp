#pragma once

// Constructive heavy-path algorithms that follow the induction on |V(G)|:
//
//   find_path_t5    PairMax hypothesis on V - {x,y}: heavy or Hamilton (x,y)-path
//   find_path_t8    TripleMax hypothesis on V - {x}: heavy or Hamilton x-path
//   find_paths_t10  TripleMax hypothesis on V - {x,y}: heavy (x,y)-path, heavy
//                   disjoint x-path/y-path pair, or spanning disjoint pair
//
// The Dirac-type subroutine (an (x,y)-path of weight >= d when every other
// vertex has weighted degree >= d) is realized by the exact oracle.
//
// Recursive calls operate on induced copies that keep the host's vertex ids;
// zero-weight edges and gadget vertices introduced at a step are marked
// auxiliary and removed again by that step's substitutions before its result
// is handed upward. Every step re-checks its own hypothesis, so a claim made
// by the case analysis that fails at runtime surfaces as InternalError.

#include "heavypath/conditions.hpp"
#include "heavypath/graph.hpp"
#include "heavypath/oracle.hpp"
#include "heavypath/trace.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace heavypath {

enum class PathConclusion { HeavyPath, HamiltonPath };
enum class PairConclusion { HeavyXYPath, HeavyDisjointPair, SpanningDisjointPair };

inline const char* name(PathConclusion c) {
  return c == PathConclusion::HeavyPath ? "HeavyPath" : "HamiltonPath";
}
inline const char* name(PairConclusion c) {
  switch (c) {
    case PairConclusion::HeavyXYPath: return "HeavyXYPath";
    case PairConclusion::HeavyDisjointPair: return "HeavyDisjointPair";
    case PairConclusion::SpanningDisjointPair: return "SpanningDisjointPair";
  }
  return "?";
}

/// Outcome of find_path_t5 / find_path_t8.
struct PathOutcome {
  PathConclusion kind;
  Path path;
};

/// Outcome of find_paths_t10. `second` is empty for HeavyXYPath.
struct PairOutcome {
  PairConclusion kind;
  Path first;
  Path second;
};

template <class Outcome>
struct Construction {
  Outcome outcome;
  TraceStep trace;
};

class HypothesisViolated : public Error {
 public:
  HypothesisViolated(const std::string& what, VertexSet tuple)
      : Error(what), tuple_(std::move(tuple)) {}
  const VertexSet& tuple() const { return tuple_; }

 private:
  VertexSet tuple_;
};

/// A claim made by the case analysis failed on a concrete input.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// The oracle found no path of weight >= d where the Dirac-type guarantee
/// promises one.
class GuaranteeViolated : public Error {
 public:
  using Error::Error;
};

struct ConstructOptions {
  OracleBudget budget;
  bool force = false;  // skip the top-level hypothesis check
};

/// Realizes the Dirac-type guarantee: an (x,y)-path of weight >= d. A witness
/// that is only an auxiliary edge xy is rejected and the search repeated
/// without that edge.
inline Path theorem1_subroutine(const WeightedGraph& g, Vertex x, Vertex y, const Rational& d,
                                const OracleBudget& budget = {}) {
  g.require_vertex(x);
  g.require_vertex(y);
  if (x == y) throw Error("theorem1_subroutine: anchors must coincide");
  if (!is_two_connected(g)) throw Error("theorem1_subroutine: graph is not 2-connected");
  const Vertex anchors[] = {x, y};
  auto report = d_star(g, ConditionKind::DiracMin, anchors);
  if (ExtendedRational(d) > report.d_star)
    throw HypothesisViolated("Dirac-type hypothesis violated: vertex " +
                                 std::to_string(report.witness->front()) + " has weighted degree " +
                                 report.d_star.str() + " < " + to_string(d),
                             *report.witness);
  auto best = heaviest_xy_path(g, x, y, budget);
  if (best && best->path == Path{x, y} && g.is_auxiliary_edge(x, y)) {
    WeightedGraph reduced = g;
    reduced.remove_edge(x, y);
    best = heaviest_xy_path(reduced, x, y, budget);
  }
  if (!best) throw GuaranteeViolated("theorem1_subroutine: no (x,y)-path");
  if (best->weight < d)
    throw GuaranteeViolated("Dirac-type guarantee violated: heaviest (x,y)-path weighs " +
                            to_string(best->weight) + " < d = " + to_string(d));
  return best->path;
}

namespace detail {

inline PathOutcome classify_path(const WeightedGraph& g, const Path& p, const Rational& d,
                                 Vertex x, std::optional<Vertex> y) {
  if (!is_simple_path(g, p)) throw InternalError("lifted witness [" + p.str() + "] is not a path of G");
  if (p.front() != x || (y && p.back() != *y))
    throw InternalError("lifted witness [" + p.str() + "] has wrong end-vertices");
  if (weight_of(g, p) >= d) return {PathConclusion::HeavyPath, p};
  if (p.mask() == g.vertex_mask()) return {PathConclusion::HamiltonPath, p};
  throw InternalError("witness [" + p.str() + "] is neither heavy nor Hamilton");
}

inline PairOutcome classify_pair(const WeightedGraph& g, const std::vector<Path>& paths,
                                 const Rational& d, Vertex x, Vertex y) {
  if (paths.size() == 1) {
    const Path& p = paths[0];
    if (!is_simple_path(g, p) || p.front() != x || p.back() != y)
      throw InternalError("lifted witness [" + p.str() + "] is not an (x,y)-path of G");
    if (weight_of(g, p) >= d) return {PairConclusion::HeavyXYPath, p, {}};
    throw InternalError("(x,y)-path [" + p.str() + "] is lighter than d");
  }
  if (paths.size() != 2) throw InternalError("expected one or two witness paths");
  const Path& p1 = paths[0];
  const Path& p2 = paths[1];
  if (!is_simple_path(g, p1) || !is_simple_path(g, p2))
    throw InternalError("lifted pair [" + p1.str() + "] / [" + p2.str() + "] not paths of G");
  if (p1.front() != x || p2.front() != y)
    throw InternalError("lifted pair has wrong initial vertices");
  if (p1.mask() & p2.mask()) throw InternalError("lifted pair is not vertex-disjoint");
  if (weight_of(g, p1) + weight_of(g, p2) >= d) return {PairConclusion::HeavyDisjointPair, p1, p2};
  if ((p1.mask() | p2.mask()) == g.vertex_mask())
    return {PairConclusion::SpanningDisjointPair, p1, p2};
  throw InternalError("lifted pair is neither heavy nor spanning");
}

/// Vertex of N(x) minus `skip` maximizing w(xv), smallest id on ties.
inline Vertex heaviest_neighbor(const WeightedGraph& g, Vertex x, std::optional<Vertex> skip) {
  std::optional<Vertex> best;
  for (Vertex v : g.neighbors(x)) {
    if (skip && v == *skip) continue;
    if (!best || g.weight(x, v) > g.weight(x, *best)) best = v;
  }
  if (!best) throw InternalError("anchor has no admissible neighbour");
  return *best;
}

inline bool all_heavy(const WeightedGraph& g, Mask vertices, const Rational& d) {
  for (Vertex v : mask_to_set(vertices))
    if (weighted_degree(g, v) < d) return false;
  return true;
}

/// One side of a cut: G[side + {x, c}] plus a zero-weight marked xc if absent.
inline WeightedGraph side_graph(const WeightedGraph& g, Mask side, Vertex x, Vertex c,
                                TraceStep& step) {
  WeightedGraph out = g.induced_copy(side | bit(x) | bit(c));
  if (out.add_edge_if_absent(x, c, Rational(0), true)) step.added_edges.emplace_back(x, c);
  if (!is_two_connected(out))
    throw InternalError("side graph on {" + Path(mask_to_set(side)).str() + "} is not 2-connected");
  return out;
}

class Engine {
 public:
  explicit Engine(ConstructOptions options) : options_(std::move(options)) {}

  /// Internal result: either an outcome, or (symmetric probe mode only) the
  /// low-degree neighbour found in the final single-vertex branch.
  struct PathResult {
    std::optional<PathOutcome> outcome;
    std::optional<Vertex> partner;
    TraceStep trace;
  };
  struct PairResult {
    std::optional<PairOutcome> outcome;
    std::optional<Vertex> partner;
    TraceStep trace;
  };

  PathResult t5(const WeightedGraph& g, Vertex x, Vertex y, const Rational& d, int depth,
                bool probe);
  PathResult t8(const WeightedGraph& g, Vertex x, const Rational& d, int depth);
  PairResult t10(const WeightedGraph& g, Vertex x, Vertex y, const Rational& d, int depth,
                 bool probe);

 private:
  void check_input(const WeightedGraph& g, std::initializer_list<Vertex> anchors,
                   ConditionKind kind, const Rational& d, int depth, const char* algorithm) {
    for (Vertex a : anchors) g.require_vertex(a);
    if (anchors.size() == 2 && *anchors.begin() == *(anchors.begin() + 1))
      throw Error(std::string(algorithm) + ": anchors must differ");
    if (!is_two_connected(g)) {
      if (depth == 0) throw Error(std::string(algorithm) + ": graph is not 2-connected");
      throw InternalError(std::string(algorithm) + ": recursive instance is not 2-connected");
    }
    if (depth == 0 && options_.force) return;
    std::vector<Vertex> excluded(anchors);
    auto report = d_star(g, kind, excluded);
    if (ExtendedRational(d) > report.d_star) {
      std::string msg = std::string(algorithm) + ": hypothesis " + std::string(name(kind)) +
                        " violated for d = " + to_string(d) + " (d* = " + report.d_star.str() +
                        ", tuple [" + Path(*report.witness).str() + "])";
      if (depth == 0) throw HypothesisViolated(msg, *report.witness);
      throw InternalError("recursive " + msg);
    }
  }

  void check_smaller(const WeightedGraph& child, const WeightedGraph& parent, bool strict) {
    const int c = child.vertex_count(), p = parent.vertex_count();
    if (strict ? c >= p : c > p)
      throw InternalError("recursive instance does not shrink (" + std::to_string(c) + " vs " +
                          std::to_string(p) + " vertices)");
  }

  TraceStep begin(const char* algorithm, const WeightedGraph& g, std::vector<Vertex> anchors,
                  const Rational& d, int depth) {
    TraceStep s;
    s.algorithm = algorithm;
    s.depth = depth;
    s.anchors = std::move(anchors);
    s.d = d;
    s.vertex_count = g.vertex_count();
    return s;
  }

  TraceStep theorem1_step(const WeightedGraph& g, Vertex x, Vertex y, const Rational& d,
                          int depth, Path& out) {
    TraceStep s = begin("T1", g, {x, y}, d, depth);
    s.case_label = "Dirac-type subroutine";
    s.answered_by = "oracle";
    out = theorem1_subroutine(g, x, y, d, options_.budget);
    s.result = {out};
    Rewriter rw(s);
    rw.introduce(out, "heaviest (x,y)-path");
    s.outcome = "HeavyPath";
    return s;
  }

  /// Runs the Dirac-type subroutine as a child of `step` and introduces its path.
  int theorem1_child(TraceStep& step, Rewriter& rw, const WeightedGraph& g, Vertex x, Vertex y,
                     const Rational& d) {
    Path p;
    step.children.push_back(theorem1_step(g, x, y, d, step.depth + 1, p));
    step.answered_by = "Dirac-type subroutine (oracle)";
    return rw.introduce_child(static_cast<int>(step.children.size()) - 1, 0,
                              "(x,y)-path of weight >= d");
  }

  ConstructOptions options_;
};

inline Engine::PathResult Engine::t5(const WeightedGraph& g, Vertex x, Vertex y,
                                     const Rational& d, int depth, bool probe) {
  check_input(g, {x, y}, ConditionKind::PairMax, d, depth, "find_path_t5");
  PathResult res;
  TraceStep& step = res.trace;
  step = begin("T5", g, {x, y}, d, depth);
  if (probe) step.notes.push_back("symmetric probe with the roles of the anchors exchanged");
  Rewriter rw(step);
  const int n = g.vertex_count();

  if (d <= 0) {
    step.case_label = "d <= 0";
    rw.introduce(*bfs_path(g, x, y, g.vertex_mask()), "any (x,y)-path");
  } else if (n == 3) {
    step.case_label = "base case n = 3";
    const Vertex mid = std::countr_zero(g.vertex_mask() & ~bit(x) & ~bit(y));
    Path through{x, mid, y};
    if (weight_of(g, through) < d && g.has_edge(x, y) && g.weight(x, y) >= d)
      rw.introduce(Path{x, y}, "edge xy");
    else
      rw.introduce(through, "path through the third vertex");
  } else if (WeightedGraph h = g.without_vertex(x); is_two_connected(h)) {
    step.case_label = "Case 1: G - x is 2-connected";
    const Vertex xp = heaviest_neighbor(g, x, y);
    step.x_prime = xp;
    check_smaller(h, g, true);
    auto child = t5(h, xp, y, d - g.weight(x, xp), depth + 1, false);
    step.children.push_back(std::move(child.trace));
    step.answered_by = "induction";
    int p = rw.introduce_child(0, 0, "(x',y)-path P' in H");
    rw.prepend(p, x, "P = x x' P'");
  } else {
    const Vertex z = cut_vertices(h).front();
    step.z = z;
    const Vertex zs[] = {z};
    auto comps = components_after_removal(h, zs);
    Mask rest = h.vertex_mask() & ~bit(z);
    if (y == z) {
      step.case_label = "Subcase 2.1: y = z";
      Mask h1 = set_to_mask(comps.front());
      Mask h2 = rest & ~h1;
      step.h1 = mask_to_set(h1);
      step.h2 = mask_to_set(h2);
      bool done = false;
      for (Mask side : {h1, h2}) {
        if (!all_heavy(g, side, d)) continue;
        WeightedGraph gi = side_graph(g, side, x, z, step);
        theorem1_child(step, rw, gi, x, y, d);
        done = true;
        break;
      }
      if (!done) throw InternalError("Subcase 2.1: neither side has all weighted degrees >= d");
    } else {
      Mask h1 = 0;
      for (const auto& c : comps)
        if (std::find(c.begin(), c.end(), y) != c.end()) h1 = set_to_mask(c);
      Mask h2 = rest & ~h1;
      step.h1 = mask_to_set(h1);
      step.h2 = mask_to_set(h2);
      WeightedGraph g1 = side_graph(g, h1, x, z, step);
      WeightedGraph g2 = side_graph(g, h2, x, z, step);
      const bool xz_added = !g.has_edge(x, z);
      check_smaller(g2, g, true);
      auto c2 = t5(g2, x, z, d, depth + 1, false);
      const PathOutcome p2 = *c2.outcome;
      step.children.push_back(std::move(c2.trace));
      std::optional<int> heavy;
      if (p2.kind == PathConclusion::HeavyPath) {
        heavy = rw.introduce_child(0, 0, "heavy (x,z)-path P2 in G2");
      } else if (auto best = heaviest_xy_path(g2, x, z, options_.budget); best && best->weight >= d) {
        step.notes.push_back("oracle found an (x,z)-path of weight >= d in G2");
        heavy = rw.introduce(best->path, "heaviest (x,z)-path of G2");
      }
      if (heavy) {
        step.case_label = "Subcase 2.2: y != z, heavy (x,z)-path in G2";
        step.answered_by = "induction";
        int p1 = rw.introduce(*bfs_path(g, z, y, h1 | bit(z)), "(z,y)-path P1 in G1 - x");
        rw.join(*heavy, p1, "P = P2 P1");
      } else {
        if (all_heavy(g, h2, d))
          throw GuaranteeViolated("every vertex of H2 has weighted degree >= d but G2 has no heavy (x,z)-path");
        if (!all_heavy(g, h1 & ~bit(y), d))
          throw InternalError("Subcase 2.2: a vertex of H1 - y has weighted degree < d");
        if (std::popcount(h2) >= 2) {
          step.case_label = "Sub-subcase 2.2.1: |H2| >= 2";
          WeightedGraph g1p = g1;
          const Vertex gadget = g1p.add_gadget_vertex({x, z});
          step.x_prime = gadget;
          step.gadget_vertices.push_back(gadget);
          step.added_edges.emplace_back(x, gadget);
          step.added_edges.emplace_back(gadget, z);
          check_smaller(g1p, g, true);
          auto c1 = t5(g1p, x, y, d, depth + 1, false);
          const PathOutcome p1 = *c1.outcome;
          step.children.push_back(std::move(c1.trace));
          step.answered_by = "induction";
          int p = rw.introduce_child(1, 0, "(x,y)-path P' in G'1");
          const auto& seq = p1.path.vertices();
          if (seq.size() >= 3 && seq[1] == gadget) {
            rw.splice(p, {x, gadget, z}, p2.path, "replace x x' z by the Hamilton (x,z)-path P2 of G2");
          } else if (xz_added && seq.size() >= 2 && seq[1] == z) {
            rw.splice(p, {x, z}, p2.path, "replace added edge xz by P2");
          }
        } else {
          step.case_label = "Sub-subcase 2.2.2: |H2| = 1";
          const Vertex xp = std::countr_zero(h2);
          step.x_prime = xp;
          if (g.degree(xp) != 2 || !g.has_edge(x, xp) || weighted_degree(g, xp) >= d)
            throw InternalError("Sub-subcase 2.2.2: x' does not have degree 2 and weighted degree < d");
          if (probe) {
            step.outcome = "partner";
            res.partner = xp;
            return res;
          }
          auto mirror = t5(g, y, x, d, depth, true);
          step.children.push_back(std::move(mirror.trace));
          if (mirror.outcome) {
            step.case_label += ", closed by the symmetric argument";
            step.answered_by = "symmetric argument";
            int p = rw.introduce_child(static_cast<int>(step.children.size()) - 1, 0,
                                       "(y,x)-path from the symmetric argument");
            rw.reverse(p, "orient from x");
          } else {
            const Vertex yp = *mirror.partner;
            step.y_prime = yp;
            if (yp != z || g.degree(z) != 2)
              throw InternalError("Sub-subcase 2.2.2: expected y' = z with d(z) = 2, got y' = " +
                                  std::to_string(yp));
            step.case_label += ", y' = z";
            if (h1 == bit(y)) {
              step.answered_by = "direct";
              rw.introduce(Path{x, xp, z, y}, "Hamilton path x x' z y");
            } else {
              WeightedGraph g1p = g.induced_copy(h1 | bit(x));
              if (g1p.add_edge_if_absent(x, y, Rational(0), true)) step.added_edges.emplace_back(x, y);
              if (!is_two_connected(g1p)) throw InternalError("Sub-subcase 2.2.2: G[H1 + x] + xy is not 2-connected");
              theorem1_child(step, rw, g1p, x, y, d);
            }
          }
        }
      }
    }
  }

  step.result = rw.paths();
  if (step.result.size() != 1) throw InternalError("T5 step produced " + std::to_string(step.result.size()) + " paths");
  res.outcome = classify_path(g, step.result.front(), d, x, y);
  step.outcome = name(res.outcome->kind);
  return res;
}

inline Engine::PathResult Engine::t8(const WeightedGraph& g, Vertex x, const Rational& d,
                                     int depth) {
  check_input(g, {x}, ConditionKind::TripleMax, d, depth, "find_path_t8");
  PathResult res;
  TraceStep& step = res.trace;
  step = begin("T8", g, {x}, d, depth);
  Rewriter rw(step);
  const int n = g.vertex_count();

  if (d <= 0) {
    step.case_label = "d <= 0";
    rw.introduce(Path{x}, "the trivial x-path");
  } else if (n == 3) {
    step.case_label = "base case n = 3";
    VertexSet others = mask_to_set(g.vertex_mask() & ~bit(x));
    Path a{x, others[0], others[1]}, b{x, others[1], others[0]};
    rw.introduce(weight_of(g, b) > weight_of(g, a) ? b : a, "heavier Hamilton x-path");
  } else if (WeightedGraph h = g.without_vertex(x); is_two_connected(h)) {
    step.case_label = "Case 1: G - x is 2-connected";
    const Vertex xp = heaviest_neighbor(g, x, std::nullopt);
    step.x_prime = xp;
    check_smaller(h, g, true);
    auto child = t8(h, xp, d - g.weight(x, xp), depth + 1);
    step.children.push_back(std::move(child.trace));
    step.answered_by = "induction";
    int p = rw.introduce_child(0, 0, "x'-path P' in H");
    rw.prepend(p, x, "P = x x' P'");
  } else {
    step.case_label = "Case 2: G - x is separable";
    const Vertex y = cut_vertices(h).front();
    step.z = y;
    const Vertex ys[] = {y};
    auto comps = components_after_removal(h, ys);
    Mask h1 = set_to_mask(comps.front());
    Mask h2 = h.vertex_mask() & ~bit(y) & ~h1;
    step.h1 = mask_to_set(h1);
    step.h2 = mask_to_set(h2);
    WeightedGraph g1 = side_graph(g, h1, x, y, step);
    WeightedGraph g2 = side_graph(g, h2, x, y, step);
    if (all_heavy(g, h1, d) || all_heavy(g, h2, d)) {
      step.case_label += ", one side has all weighted degrees >= d";
      theorem1_child(step, rw, all_heavy(g, h1, d) ? g1 : g2, x, y, d);
    } else {
      step.case_label += ", both sides contain a light vertex";
      step.answered_by = "find_path_t5 on both sides";
      std::vector<PathOutcome> sides;
      for (const WeightedGraph* gi : {&g1, &g2}) {
        check_smaller(*gi, g, true);
        auto c = t5(*gi, x, y, d, depth + 1, false);
        sides.push_back(*c.outcome);
        step.children.push_back(std::move(c.trace));
      }
      if (sides[0].kind == PathConclusion::HeavyPath) {
        rw.introduce_child(0, 0, "heavy (x,y)-path in G1");
      } else if (sides[1].kind == PathConclusion::HeavyPath) {
        rw.introduce_child(1, 0, "heavy (x,y)-path in G2");
      } else {
        int p1 = rw.introduce_child(0, 0, "Hamilton (x,y)-path P1 of G1");
        int p2 = rw.introduce_child(1, 0, "Hamilton (x,y)-path P2 of G2");
        rw.reverse(p2, "C = P1 P2 is a Hamilton cycle");
        rw.trim_back(p2, "drop the closing edge at x");
        rw.join(p1, p2, "Hamilton x-path along C");
      }
    }
  }

  step.result = rw.paths();
  if (step.result.size() != 1) throw InternalError("T8 step produced several paths");
  res.outcome = classify_path(g, step.result.front(), d, x, std::nullopt);
  step.outcome = name(res.outcome->kind);
  return res;
}

inline Engine::PairResult Engine::t10(const WeightedGraph& g, Vertex x, Vertex y,
                                      const Rational& d, int depth, bool probe) {
  check_input(g, {x, y}, ConditionKind::TripleMax, d, depth, "find_paths_t10");
  PairResult res;
  TraceStep& step = res.trace;
  step = begin("T10", g, {x, y}, d, depth);
  if (probe) step.notes.push_back("symmetric probe with the roles of the anchors exchanged");
  Rewriter rw(step);
  const int n = g.vertex_count();
  auto last_child = [&]() { return static_cast<int>(step.children.size()) - 1; };
  auto introduce_pair = [&](int child, const char* note) {
    rw.introduce_child(child, 0, note);
    if (step.children[static_cast<std::size_t>(child)].result.size() == 2)
      rw.introduce_child(child, 1, note);
  };

  if (d <= 0) {
    step.case_label = "d <= 0";
    rw.introduce(*bfs_path(g, x, y, g.vertex_mask()), "any (x,y)-path");
  } else if (n == 3) {
    step.case_label = "base case n = 3";
    const Vertex mid = std::countr_zero(g.vertex_mask() & ~bit(x) & ~bit(y));
    Path through{x, mid, y};
    if (weight_of(g, through) >= d) {
      rw.introduce(through, "path through the third vertex");
    } else if (g.has_edge(x, y) && g.weight(x, y) >= d) {
      rw.introduce(Path{x, y}, "edge xy");
    } else {
      int p = rw.introduce(through, "Hamilton (x,y)-path");
      rw.split_at_edge(p, mid, y, "spanning pair x z / y");
    }
  } else if (WeightedGraph h = g.without_vertex(x); is_two_connected(h)) {
    step.case_label = "Case 1: G - x is 2-connected";
    const Vertex xp = heaviest_neighbor(g, x, y);
    step.x_prime = xp;
    check_smaller(h, g, true);
    auto child = t10(h, xp, y, d - g.weight(x, xp), depth + 1, false);
    step.children.push_back(std::move(child.trace));
    step.answered_by = "induction";
    introduce_pair(0, "conclusion for H with anchors x', y");
    rw.prepend(0, x, "prefix the x'-side with x x'");
  } else {
    const Vertex z = cut_vertices(h).front();
    step.z = z;
    const Vertex zs[] = {z};
    auto comps = components_after_removal(h, zs);
    Mask rest = h.vertex_mask() & ~bit(z);
    if (y == z) {
      step.case_label = "Subcase 2.1: y = z";
      Mask h1 = set_to_mask(comps.front());
      Mask h2 = rest & ~h1;
      step.h1 = mask_to_set(h1);
      step.h2 = mask_to_set(h2);
      WeightedGraph g1 = side_graph(g, h1, x, y, step);
      WeightedGraph g2 = side_graph(g, h2, x, y, step);
      if (all_heavy(g, h1, d) || all_heavy(g, h2, d)) {
        step.case_label += ", one side has all weighted degrees >= d";
        theorem1_child(step, rw, all_heavy(g, h1, d) ? g1 : g2, x, y, d);
      } else {
        step.answered_by = "find_path_t5 on both sides";
        std::vector<PathOutcome> sides;
        for (const WeightedGraph* gi : {&g1, &g2}) {
          check_smaller(*gi, g, true);
          auto c = t5(*gi, x, y, d, depth + 1, false);
          sides.push_back(*c.outcome);
          step.children.push_back(std::move(c.trace));
        }
        if (sides[0].kind == PathConclusion::HeavyPath) {
          rw.introduce_child(0, 0, "heavy (x,y)-path in G1");
        } else if (sides[1].kind == PathConclusion::HeavyPath) {
          rw.introduce_child(1, 0, "heavy (x,y)-path in G2");
        } else {
          int p1 = rw.introduce_child(0, 0, "Hamilton (x,y)-path P'1 of G1");
          int p2 = rw.introduce_child(1, 0, "Hamilton (x,y)-path P'2 of G2");
          rw.trim_back(p2, "x-path: P'2 without y");
          rw.reverse(p1, "y-path: P'1 reversed without x");
          rw.trim_back(p1, "y-path: P'1 reversed without x");
          rw.swap(p1, p2, "order as (x-path, y-path)");
        }
      }
    } else {
      Mask h1 = 0;
      for (const auto& c : comps)
        if (std::find(c.begin(), c.end(), y) != c.end()) h1 = set_to_mask(c);
      Mask h2 = rest & ~h1;
      step.h1 = mask_to_set(h1);
      step.h2 = mask_to_set(h2);
      WeightedGraph g1 = side_graph(g, h1, x, z, step);
      WeightedGraph g2 = side_graph(g, h2, x, z, step);
      const bool xz_added = !g.has_edge(x, z);
      check_smaller(g2, g, true);
      auto c2 = t10(g2, x, z, d, depth + 1, false);
      const PairOutcome o2 = *c2.outcome;
      step.children.push_back(std::move(c2.trace));
      const int c2_index = last_child();

      std::optional<int> heavy;
      if (o2.kind == PairConclusion::HeavyXYPath) {
        heavy = rw.introduce_child(c2_index, 0, "heavy (x,z)-path P'2 in G2");
      } else if (auto best = heaviest_xy_path(g2, x, z, options_.budget); best && best->weight >= d) {
        step.notes.push_back("oracle found an (x,z)-path of weight >= d in G2");
        heavy = rw.introduce(best->path, "heaviest (x,z)-path of G2");
      }
      const Path zy = *bfs_path(g, z, y, h1 | bit(z));
      if (heavy) {
        step.case_label = "Subcase 2.2: y != z, heavy (x,z)-path in G2";
        step.answered_by = "induction";
        int p1 = rw.introduce(zy, "(z,y)-path P'1 in G1 - x");
        rw.join(*heavy, p1, "P = P'2 P'1");
      } else if (all_heavy(g, h2, d)) {
        throw GuaranteeViolated("every vertex of H2 has weighted degree >= d but G2 has no heavy (x,z)-path");
      } else if (o2.kind == PairConclusion::HeavyDisjointPair) {
        step.case_label = "Subcase 2.2: y != z, heavy disjoint pair in G2";
        step.answered_by = "induction";
        rw.introduce_child(c2_index, 0, "x-path P'21");
        int p2 = rw.introduce(zy.reversed(), "(y,z)-path P'1 in G1 - x");
        int p22 = rw.introduce_child(c2_index, 1, "z-path P'22");
        rw.join(p2, p22, "P2 = P'1 P'22");
      } else if (all_heavy(g, h1 & ~bit(y), d)) {
        step.case_label = "Sub-subcase 2.2.1: H1 - y has all weighted degrees >= d";
        WeightedGraph g1p = g1;
        const Vertex gadget = g1p.add_gadget_vertex({x, z});
        step.x_prime = gadget;
        step.gadget_vertices.push_back(gadget);
        step.added_edges.emplace_back(x, gadget);
        step.added_edges.emplace_back(gadget, z);
        check_smaller(g1p, g, false);
        auto c1 = t5(g1p, x, y, d, depth + 1, false);
        const PathOutcome o1 = *c1.outcome;
        step.children.push_back(std::move(c1.trace));
        step.answered_by = "find_path_t5 on G'1";
        const auto& seq = o1.path.vertices();
        if (o1.kind == PathConclusion::HeavyPath) {
          int p = rw.introduce_child(last_child(), 0, "(x,y)-path P' in G'1");
          WeightedGraph g2_real = g2;
          if (xz_added) g2_real.remove_edge(x, z);
          const Path xz_path = *bfs_path(g2_real, x, z, g2_real.vertex_mask());
          if (seq.size() >= 3 && seq[1] == gadget)
            rw.splice(p, {x, gadget, z}, xz_path, "replace x x' z by an (x,z)-path of G2");
          else if (xz_added && seq.size() >= 2 && seq[1] == z)
            rw.splice(p, {x, z}, xz_path, "replace added edge xz by an (x,z)-path of G2");
        } else {
          if (seq.size() < 3 || seq[1] != gadget)
            throw InternalError("Hamilton path of G'1 does not begin x x' z");
          rw.introduce_child(c2_index, 0, "x-path P'21");
          int p = rw.introduce_child(last_child(), 0, "Hamilton (x,y)-path P' of G'1");
          rw.trim_front(p, "P'1 = P' - {xx', x'z}");
          rw.trim_front(p, "P'1 = P' - {xx', x'z}");
          rw.reverse(p, "orient P'1 from y");
          int p22 = rw.introduce_child(c2_index, 1, "z-path P'22");
          rw.join(p, p22, "P2 = P'1 P'22");
        }
      } else {
        // Sub-subcase 2.2.2: a vertex of H1 - y is light.
        check_smaller(g2, g, true);
        auto ch = t5(g2, x, z, d, depth + 1, false);
        const PathOutcome oh = *ch.outcome;
        step.children.push_back(std::move(ch.trace));
        if (oh.kind != PathConclusion::HamiltonPath)
          throw InternalError("Sub-subcase 2.2.2: expected a Hamilton (x,z)-path of G2");
        const Path ham = oh.path;  // x ... z, covers H2 + {x, z}

        if (std::popcount(h2) >= 2) {
          step.case_label = "Sub-subcase 2.2.2, |H2| >= 2";
          WeightedGraph g1p = g1;
          const Vertex gadget = g1p.add_gadget_vertex({x, z});
          step.x_prime = gadget;
          step.gadget_vertices.push_back(gadget);
          step.added_edges.emplace_back(x, gadget);
          step.added_edges.emplace_back(gadget, z);
          check_smaller(g1p, g, true);
          auto c1 = t10(g1p, x, y, d, depth + 1, false);
          const PairOutcome o1 = *c1.outcome;
          step.children.push_back(std::move(c1.trace));
          step.answered_by = "induction on G'1";
          introduce_pair(last_child(), "conclusion for G'1");
          const bool spanning = o1.kind == PairConclusion::SpanningDisjointPair;
          // Replacement for a segment joining x to z: the real edge xz when it
          // exists (heavy cases), otherwise the Hamilton (x,z)-path of G2.
          const Path x_to_z = (!spanning && !xz_added) ? Path{x, z} : ham;
          Path ham_minus_z = ham;
          ham_minus_z.vertices().pop_back();
          Path z_side = ham.reversed();  // z-path of G2 avoiding x
          z_side.vertices().pop_back();

          const auto& f = o1.first.vertices();
          auto ends_with = [](const std::vector<Vertex>& s, Vertex a, Vertex b) {
            return s.size() >= 2 && s[s.size() - 2] == a && s.back() == b;
          };
          if (f.size() >= 3 && f[1] == gadget && f[2] == z) {
            rw.splice(0, {x, gadget, z}, x_to_z, "replace x x' z by an (x,z)-path of G2");
          } else if (f.size() == 3 && f[1] == z && f[2] == gadget) {
            rw.splice(0, {x, z, gadget}, x_to_z, "replace x z x' by an (x,z)-path of G2");
          } else if (f.size() >= 2 && f[1] == z && xz_added) {
            rw.splice(0, {x, z}, x_to_z, "replace added edge xz by an (x,z)-path of G2");
          } else if (f.size() == 2 && f[1] == gadget) {
            rw.splice(0, {x, gadget}, ham_minus_z, "replace xx' by an x-path of G2 avoiding z");
          } else if (ends_with(f, z, gadget)) {
            rw.splice(0, {z, gadget}, z_side, "replace zx' by a z-path of G2 avoiding x");
          } else if (o1.kind != PairConclusion::HeavyXYPath &&
                     ends_with(o1.second.vertices(), z, gadget)) {
            rw.splice(1, {z, gadget}, z_side, "replace zx' by a z-path of G2 avoiding x");
          }
        } else {
          step.case_label = "Sub-subcase 2.2.2, |H2| = 1";
          const Vertex xp = std::countr_zero(h2);
          step.x_prime = xp;
          if (g.degree(xp) != 2 || !g.has_edge(x, xp) || weighted_degree(g, xp) >= d)
            throw InternalError("|H2| = 1: x' does not have degree 2 and weighted degree < d");
          if (probe) {
            step.outcome = "partner";
            res.partner = xp;
            return res;
          }
          auto mirror = t10(g, y, x, d, depth, true);
          step.children.push_back(std::move(mirror.trace));
          if (mirror.outcome) {
            step.case_label += ", closed by the symmetric argument";
            step.answered_by = "symmetric argument";
            introduce_pair(last_child(), "conclusion with anchors exchanged");
            if (mirror.outcome->kind == PairConclusion::HeavyXYPath)
              rw.reverse(0, "orient from x");
            else
              rw.swap(0, 1, "order as (x-path, y-path)");
          } else {
            const Vertex yp = *mirror.partner;
            step.y_prime = yp;
            if (!g.has_edge(y, yp) || yp == x || g.degree(yp) != 2 || weighted_degree(g, yp) >= d)
              throw InternalError("|H2| = 1: y' does not have degree 2 and weighted degree < d");
            if (yp == z) {
              step.case_label += ", y' = z";
              if (g.degree(z) != 2) throw InternalError("y' = z but d(z) != 2");
              if (h1 == bit(y)) {
                step.answered_by = "direct";
                rw.introduce(Path{x, xp, z}, "x-path x x' z");
                rw.introduce(Path{y}, "y-path y");
              } else {
                WeightedGraph g1p = g.induced_copy(h1 | bit(x));
                if (g1p.add_edge_if_absent(x, y, Rational(0), true)) step.added_edges.emplace_back(x, y);
                if (!is_two_connected(g1p)) throw InternalError("G[H1 + x] + xy is not 2-connected");
                check_smaller(g1p, g, true);
                auto c1 = t5(g1p, x, y, d, depth + 1, false);
                const PathOutcome o1 = *c1.outcome;
                step.children.push_back(std::move(c1.trace));
                step.answered_by = "find_path_t5 on G[H1 + x] + xy";
                if (o1.kind == PathConclusion::HeavyPath) {
                  rw.introduce_child(last_child(), 0, "heavy (x,y)-path P'1");
                } else {
                  rw.introduce(Path{x, xp, z}, "x-path x x' z");
                  int p = rw.introduce_child(last_child(), 0, "Hamilton path P'1 of G'1");
                  rw.trim_front(p, "P'1 - x");
                  rw.reverse(p, "orient from y");
                }
              }
            } else {
              const Vertex ypp = std::countr_zero(g.neighbor_mask(yp) & ~bit(y));
              step.y_double_prime = ypp;
              if (ypp == x) throw InternalError("|H2| = 1: y'' coincides with x");
              if (ypp == z) {
                step.case_label += ", y' != z, y'' = z";
                WeightedGraph gp = g;
                if (!gp.add_edge_if_absent(xp, yp, Rational(0), true))
                  throw InternalError("edge x'y' unexpectedly present");
                step.added_edges.emplace_back(xp, yp);
                check_smaller(gp, g, false);
                auto c = t5(gp, x, y, d, depth + 1, false);
                const PathOutcome o = *c.outcome;
                step.children.push_back(std::move(c.trace));
                step.answered_by = "find_path_t5 on G + x'y'";
                int p = rw.introduce_child(last_child(), 0, "(x,y)-path P' in G'");
                if (o.path.uses_edge(xp, yp)) {
                  rw.split_at_edge(p, xp, yp, "P' - x'y'");
                  rw.reverse(1, "orient the y-path from y");
                } else if (weight_of(g, o.path) < d) {
                  rw.split_at_edge(p, o.path.vertices()[0], o.path.vertices()[1],
                                   "Hamilton (x,y)-path minus its first edge");
                  rw.reverse(1, "orient the y-path from y");
                }
              } else {
                step.case_label += ", y' != z, y'' != z";
                WeightedGraph g1p = g1;
                std::vector<std::pair<Vertex, Vertex>> added;
                if (xz_added) added.emplace_back(x, z);
                g1p.add_edge(z, yp, Rational(0), true);
                added.emplace_back(z, yp);
                step.added_edges.emplace_back(z, yp);
                if (g1p.add_edge_if_absent(z, ypp, Rational(0), true)) {
                  added.emplace_back(z, ypp);
                  step.added_edges.emplace_back(z, ypp);
                }
                if (!is_two_connected(g1p)) throw InternalError("G1 + zy' + zy'' is not 2-connected");
                check_smaller(g1p, g, true);
                auto c = t5(g1p, x, y, d, depth + 1, false);
                const PathOutcome o = *c.outcome;
                step.children.push_back(std::move(c.trace));
                step.answered_by = "find_path_t5 on G1 + zy' + zy''";
                rw.introduce_child(last_child(), 0, "(x,y)-path P'1 in G'1");
                auto uses = [&](Vertex a, Vertex b) {
                  return std::find(added.begin(), added.end(), std::pair{a, b}) != added.end() &&
                         o.path.uses_edge(a, b);
                };
                const bool has_xz = uses(x, z);
                const bool has_zyp = uses(z, yp);
                const bool has_zypp = uses(z, ypp);
                if (o.kind == PathConclusion::HeavyPath) {
                  if (has_xz || has_zyp || has_zypp) {
                    // Deleting the added edges leaves the x-piece, the
                    // y-piece and possibly the lone vertex z between them.
                    for (auto [a, b] : added) {
                      for (int i = 0; i < rw.size(); ++i)
                        if (rw.path(i).uses_edge(a, b)) {
                          rw.split_at_edge(i, a, b, "delete added edge");
                          break;
                        }
                    }
                    for (int i = rw.size() - 1; i >= 0; --i)
                      if (!rw.path(i).contains(x) && !rw.path(i).contains(y))
                        rw.discard(i, "drop the piece {z}");
                    if (rw.path(0).front() != x) rw.swap(0, 1);
                    rw.reverse(1, "orient the y-path from y");
                  }
                } else if (!has_zyp && !has_zypp) {
                  rw.trim_front(0, "P2 = P'1 - x");
                  rw.reverse(0, "orient from y");
                  rw.introduce(Path{x, xp}, "P1 = x x'");
                  rw.swap(0, 1);
                } else if (has_xz) {
                  rw.trim_front(0, "P2 = P'1 - {x, z}");
                  rw.trim_front(0, "P2 = P'1 - {x, z}");
                  rw.reverse(0, "orient from y");
                  rw.introduce(Path{x, xp, z}, "P1 = x x' z");
                  rw.swap(0, 1);
                } else if (has_zyp != has_zypp) {
                  const Vertex other = has_zyp ? yp : ypp;
                  rw.split_at_edge(0, z, other, "P'1 - e");
                  rw.reverse(1, "orient the y-path from y");
                  const int z_end = rw.path(0).back() == z ? 0 : 1;
                  rw.append(z_end, xp, "extend the path ending in z by zx'");
                } else {
                  rw.splice(0, {ypp, z, yp}, Path{ypp, yp}, "P''1 = P'1 + y'y'' - {zy', zy''}");
                  rw.trim_front(0, "P2 = P''1 - x");
                  rw.reverse(0, "orient from y");
                  rw.introduce(Path{x, xp, z}, "P1 = x x' z");
                  rw.swap(0, 1);
                }
              }
            }
          }
        }
      }
    }
  }

  step.result = rw.paths();
  res.outcome = classify_pair(g, step.result, d, x, y);
  step.outcome = name(res.outcome->kind);
  return res;
}

}  // namespace detail

inline Construction<PathOutcome> find_path_t5(const WeightedGraph& g, Vertex x, Vertex y,
                                              const Rational& d, ConstructOptions options = {}) {
  detail::Engine engine(std::move(options));
  auto r = engine.t5(g, x, y, d, 0, false);
  return {*r.outcome, std::move(r.trace)};
}

inline Construction<PathOutcome> find_path_t8(const WeightedGraph& g, Vertex x, const Rational& d,
                                              ConstructOptions options = {}) {
  detail::Engine engine(std::move(options));
  auto r = engine.t8(g, x, d, 0);
  return {*r.outcome, std::move(r.trace)};
}

inline Construction<PairOutcome> find_paths_t10(const WeightedGraph& g, Vertex x, Vertex y,
                                                const Rational& d, ConstructOptions options = {}) {
  detail::Engine engine(std::move(options));
  auto r = engine.t10(g, x, y, d, 0, false);
  return {*r.outcome, std::move(r.trace)};
}

}  // namespace heavypath
