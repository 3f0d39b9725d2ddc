#pragma once

// Weighted-degree hypotheses and their largest satisfiable thresholds.
//
// Every kind is "aggregate(d^w over a qualifying tuple) >= d for every
// qualifying tuple drawn from V(G) minus the excluded anchors". Sum-form
// kinds are divided by the tuple size so all kinds live on the same d-scale.

#include "heavypath/graph.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace heavypath {

enum class ConditionKind {
  DiracMin,
  OrePairSum,
  PairMax,
  TripleSum,
  TripleMax,
  QuadSum,
  QuadMax,
  PairMaxDist2,
};

inline constexpr std::array<ConditionKind, 8> kAllConditionKinds = {
    ConditionKind::DiracMin,  ConditionKind::OrePairSum, ConditionKind::PairMax,
    ConditionKind::TripleSum, ConditionKind::TripleMax,  ConditionKind::QuadSum,
    ConditionKind::QuadMax,   ConditionKind::PairMaxDist2,
};

inline std::string_view name(ConditionKind kind) {
  switch (kind) {
    case ConditionKind::DiracMin: return "DiracMin";
    case ConditionKind::OrePairSum: return "OrePairSum";
    case ConditionKind::PairMax: return "PairMax";
    case ConditionKind::TripleSum: return "TripleSum";
    case ConditionKind::TripleMax: return "TripleMax";
    case ConditionKind::QuadSum: return "QuadSum";
    case ConditionKind::QuadMax: return "QuadMax";
    case ConditionKind::PairMaxDist2: return "PairMaxDist2";
  }
  return "?";
}

inline ConditionKind parse_condition_kind(std::string_view text) {
  for (ConditionKind k : kAllConditionKinds)
    if (name(k) == text) return k;
  throw Error("unknown condition kind '" + std::string(text) + "'");
}

inline int tuple_size(ConditionKind kind) {
  switch (kind) {
    case ConditionKind::DiracMin: return 1;
    case ConditionKind::OrePairSum:
    case ConditionKind::PairMax:
    case ConditionKind::PairMaxDist2: return 2;
    case ConditionKind::TripleSum:
    case ConditionKind::TripleMax: return 3;
    case ConditionKind::QuadSum:
    case ConditionKind::QuadMax: return 4;
  }
  return 0;
}

inline bool is_sum_form(ConditionKind kind) {
  return kind == ConditionKind::OrePairSum || kind == ConditionKind::TripleSum ||
         kind == ConditionKind::QuadSum;
}

struct ConditionReport {
  ConditionKind kind;
  VertexSet excluded;
  ExtendedRational d_star;
  std::optional<VertexSet> witness;  // minimizing tuple, absent when d_star is infinite
};

/// Aggregated weighted degree of one tuple (sum/k or max; min for singletons).
inline Rational aggregate(const WeightedGraph& g, ConditionKind kind,
                          std::span<const Vertex> tuple) {
  Rational acc(0);
  bool first = true;
  for (Vertex v : tuple) {
    Rational dv = weighted_degree(g, v);
    if (is_sum_form(kind)) {
      acc += dv;
    } else if (first || dv > acc) {
      acc = dv;
    }
    first = false;
  }
  if (is_sum_form(kind)) acc /= static_cast<std::int64_t>(tuple.size());
  return acc;
}

/// Whether a tuple is quantified over by the hypothesis.
inline bool qualifies(const WeightedGraph& g, ConditionKind kind, std::span<const Vertex> tuple) {
  if (kind == ConditionKind::PairMaxDist2) {
    auto dist = unweighted_distance(g, tuple[0], tuple[1]);
    return dist && *dist == 2;
  }
  for (std::size_t i = 0; i < tuple.size(); ++i)
    for (std::size_t j = i + 1; j < tuple.size(); ++j)
      if (g.has_edge(tuple[i], tuple[j])) return false;
  return true;
}

/// Largest d for which the hypothesis holds; brute force over k-subsets.
inline ConditionReport d_star(const WeightedGraph& g, ConditionKind kind,
                              std::span<const Vertex> excluded) {
  for (Vertex v : excluded) g.require_vertex(v);
  ConditionReport report{kind, VertexSet(excluded.begin(), excluded.end()),
                         ExtendedRational::infinity(), std::nullopt};
  std::sort(report.excluded.begin(), report.excluded.end());
  const VertexSet pool = mask_to_set(g.vertex_mask() & ~set_to_mask(excluded));
  const int k = tuple_size(kind);
  std::vector<Vertex> tuple;
  auto visit = [&](auto&& self, std::size_t from) -> void {
    if (static_cast<int>(tuple.size()) == k) {
      if (!qualifies(g, kind, tuple)) return;
      Rational value = aggregate(g, kind, tuple);
      if (report.d_star.is_infinite() || value < report.d_star.value()) {
        report.d_star = value;
        report.witness = tuple;
      }
      return;
    }
    for (std::size_t i = from; i < pool.size(); ++i) {
      // Partial tuples that already contain an adjacent pair cannot qualify.
      if (kind != ConditionKind::PairMaxDist2 &&
          std::any_of(tuple.begin(), tuple.end(), [&](Vertex u) { return g.has_edge(u, pool[i]); }))
        continue;
      tuple.push_back(pool[i]);
      self(self, i + 1);
      tuple.pop_back();
    }
  };
  visit(visit, 0);
  return report;
}

inline bool hypothesis_holds(const WeightedGraph& g, ConditionKind kind,
                             std::span<const Vertex> excluded, const Rational& d) {
  return ExtendedRational(d) <= d_star(g, kind, excluded).d_star;
}

}  // namespace heavypath
