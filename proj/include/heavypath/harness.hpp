#pragma once

// Verification of the heavy-path theorems at their tight thresholds, sweeps
// over instance families, and counterexample search for the two open
// four-vertex conditions.

#include "heavypath/conditions.hpp"
#include "heavypath/constructive.hpp"
#include "heavypath/graph.hpp"
#include "heavypath/graph_io.hpp"
#include "heavypath/instances.hpp"
#include "heavypath/oracle.hpp"
#include "heavypath/trace.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace heavypath {

enum class TheoremId { T1, T2, T3, T4, T5, T6, T7, T8, T9, T10 };

inline constexpr std::array<TheoremId, 10> kAllTheorems = {
    TheoremId::T1, TheoremId::T2, TheoremId::T3, TheoremId::T4, TheoremId::T5,
    TheoremId::T6, TheoremId::T7, TheoremId::T8, TheoremId::T9, TheoremId::T10,
};

inline std::string name(TheoremId t) { return "T" + std::to_string(static_cast<int>(t) + 1); }

inline TheoremId parse_theorem_id(std::string_view text) {
  for (TheoremId t : kAllTheorems)
    if (name(t) == text) return t;
  throw Error("unknown theorem id '" + std::string(text) + "' (expected T1..T10)");
}

/// Number of anchors the statement names: 0 (cycles), 1 (x-paths), 2.
inline int anchor_count(TheoremId t) {
  switch (t) {
    case TheoremId::T2:
    case TheoremId::T4:
    case TheoremId::T6: return 0;
    case TheoremId::T7:
    case TheoremId::T8: return 1;
    default: return 2;
  }
}

inline ConditionKind condition_of(TheoremId t) {
  switch (t) {
    case TheoremId::T1:
    case TheoremId::T2: return ConditionKind::DiracMin;
    case TheoremId::T3:
    case TheoremId::T4: return ConditionKind::OrePairSum;
    case TheoremId::T5:
    case TheoremId::T6: return ConditionKind::PairMax;
    case TheoremId::T7:
    case TheoremId::T9: return ConditionKind::TripleSum;
    case TheoremId::T8:
    case TheoremId::T10: return ConditionKind::TripleMax;
  }
  return ConditionKind::DiracMin;
}

/// Which constructive algorithm (if any) is run alongside the oracle.
inline std::optional<TheoremId> constructive_for(TheoremId t) {
  switch (t) {
    case TheoremId::T5: return TheoremId::T5;
    case TheoremId::T7:
    case TheoremId::T8: return TheoremId::T8;
    case TheoremId::T9:
    case TheoremId::T10: return TheoremId::T10;
    default: return std::nullopt;
  }
}

inline std::uint64_t graph_hash(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

struct VerificationRecord {
  std::uint64_t graph_id = 0;
  std::string graph_text;
  std::vector<Vertex> anchors;
  TheoremId theorem = TheoremId::T1;
  ExtendedRational d_star;
  Rational d{0};  // threshold actually tested
  std::vector<std::string> feasible;  // conclusion disjuncts the oracle confirms
  std::optional<std::string> constructive;
  bool pass = false;
  std::string message;
  double seconds = 0;
};

struct VerifyOptions {
  OracleBudget budget;
  bool run_constructive = true;
};

/// Threshold used when the hypothesis is vacuous: larger than any weight a
/// subgraph can have, so only the non-weight disjuncts can hold.
inline Rational vacuous_threshold(const WeightedGraph& g) { return total_weight(g) + 1; }

namespace detail {

inline std::string validate_path_witness(const WeightedGraph& g, const PathOutcome& o,
                                         const Rational& d, Vertex x, std::optional<Vertex> y,
                                         const OracleBudget& budget) {
  const Path& p = o.path;
  if (p.empty() || !is_simple_path(g, p)) return "witness is not a simple path of G";
  if (p.front() != x) return "witness does not start at x";
  if (y && p.back() != *y) return "witness does not end at y";
  if (o.kind == PathConclusion::HeavyPath) {
    if (weight_of(g, p) < d) return "heavy witness weighs less than d";
    const Rational best = y ? heaviest_xy_path(g, x, *y, budget)->weight
                            : heaviest_x_path(g, x, budget).weight;
    if (best < d) return "oracle disagrees with heavy witness";
  } else {
    if (p.mask() != g.vertex_mask()) return "Hamilton witness misses vertices";
    const bool exists = y ? hamilton_xy_path(g, x, *y, budget).has_value()
                          : hamilton_x_path(g, x, budget).has_value();
    if (!exists) return "oracle finds no Hamilton path";
  }
  return {};
}

inline std::string validate_pair_witness(const WeightedGraph& g, const PairOutcome& o,
                                         const Rational& d, Vertex x, Vertex y,
                                         const OracleBudget& budget) {
  if (o.kind == PairConclusion::HeavyXYPath)
    return validate_path_witness(g, {PathConclusion::HeavyPath, o.first}, d, x, y, budget);
  const Path& a = o.first;
  const Path& b = o.second;
  if (a.empty() || b.empty() || !is_simple_path(g, a) || !is_simple_path(g, b))
    return "pair witness is not made of simple paths of G";
  if (a.front() != x || b.front() != y) return "pair witness has wrong initial vertices";
  if (a.mask() & b.mask()) return "pair witness is not disjoint";
  if (o.kind == PairConclusion::HeavyDisjointPair) {
    if (weight_of(g, a) + weight_of(g, b) < d) return "heavy pair weighs less than d";
    if (best_disjoint_pair(g, x, y, budget).weight < d) return "oracle disagrees with heavy pair";
  } else {
    if ((a.mask() | b.mask()) != g.vertex_mask()) return "spanning pair misses vertices";
    if (!spanning_disjoint_pair(g, x, y, budget)) return "oracle finds no spanning pair";
  }
  return {};
}

inline std::string validate_trace(const WeightedGraph& g, const TraceStep& trace) {
  if (!replay_matches(trace)) return "trace replay does not reproduce the witness";
  if (max_depth(trace) > g.vertex_count()) return "recursion deeper than |V|";
  return {};
}

}  // namespace detail

/// Checks one theorem on one graph at d = d* (or the vacuous threshold).
inline VerificationRecord verify_instance(const WeightedGraph& g, std::span<const Vertex> anchors,
                                          TheoremId theorem, const VerifyOptions& options = {}) {
  const auto start = std::chrono::steady_clock::now();
  if (!is_two_connected(g)) throw Error("verify_instance: graph is not 2-connected");
  const int k = anchor_count(theorem);
  if (static_cast<int>(anchors.size()) < k)
    throw Error(name(theorem) + " needs " + std::to_string(k) + " anchor(s)");
  VerificationRecord rec;
  rec.theorem = theorem;
  rec.anchors.assign(anchors.begin(), anchors.begin() + k);
  for (Vertex a : rec.anchors) g.require_vertex(a);
  if (k == 2 && rec.anchors[0] == rec.anchors[1]) throw Error("anchors must differ");
  rec.graph_text = format_graph(g);
  rec.graph_id = graph_hash(rec.graph_text);
  rec.d_star = d_star(g, condition_of(theorem), rec.anchors).d_star;
  rec.d = rec.d_star.is_infinite() ? vacuous_threshold(g) : rec.d_star.value();
  const Rational d = rec.d;
  const auto& budget = options.budget;
  const Vertex x = k >= 1 ? rec.anchors[0] : -1;
  const Vertex y = k == 2 ? rec.anchors[1] : -1;

  switch (theorem) {
    case TheoremId::T1:
      if (heaviest_xy_path(g, x, y, budget)->weight >= d) rec.feasible.push_back("HeavyPath");
      break;
    case TheoremId::T3:
    case TheoremId::T5:
      if (heaviest_xy_path(g, x, y, budget)->weight >= d) rec.feasible.push_back("HeavyPath");
      if (hamilton_xy_path(g, x, y, budget)) rec.feasible.push_back("HamiltonPath");
      break;
    case TheoremId::T7:
    case TheoremId::T8:
      if (heaviest_x_path(g, x, budget).weight >= d) rec.feasible.push_back("HeavyPath");
      if (hamilton_x_path(g, x, budget)) rec.feasible.push_back("HamiltonPath");
      break;
    case TheoremId::T9:
    case TheoremId::T10:
      if (heaviest_xy_path(g, x, y, budget)->weight >= d) rec.feasible.push_back("HeavyXYPath");
      if (best_disjoint_pair(g, x, y, budget).weight >= d)
        rec.feasible.push_back("HeavyDisjointPair");
      if (spanning_disjoint_pair(g, x, y, budget)) rec.feasible.push_back("SpanningDisjointPair");
      break;
    case TheoremId::T2: {
      auto best = heaviest_cycle(g, budget);
      if (best && best->weight >= 2 * d) rec.feasible.push_back("HeavyCycle");
      auto shorter = heaviest_cycle(g, budget, g.vertex_count() - 1);
      if (best && (!shorter || shorter->weight < best->weight))
        rec.feasible.push_back("HeaviestCyclesHamilton");
      break;
    }
    case TheoremId::T4:
    case TheoremId::T6: {
      auto best = heaviest_cycle(g, budget);
      if (best && best->weight >= 2 * d) rec.feasible.push_back("HeavyCycle");
      if (hamilton_cycle(g, budget)) rec.feasible.push_back("HamiltonCycle");
      break;
    }
  }
  rec.pass = !rec.feasible.empty();
  if (!rec.pass) rec.message = "no conclusion holds at d = " + to_string(d);

  if (rec.pass && options.run_constructive) {
    if (auto algo = constructive_for(theorem)) {
      ConstructOptions copt{budget, false};
      std::string problem;
      const TraceStep* trace = nullptr;
      std::optional<Construction<PathOutcome>> pc;
      std::optional<Construction<PairOutcome>> qc;
      try {
        if (*algo == TheoremId::T5) {
          pc = find_path_t5(g, x, y, d, copt);
          rec.constructive = name(pc->outcome.kind);
          problem = detail::validate_path_witness(g, pc->outcome, d, x, y, budget);
          trace = &pc->trace;
        } else if (*algo == TheoremId::T8) {
          pc = find_path_t8(g, x, d, copt);
          rec.constructive = name(pc->outcome.kind);
          problem = detail::validate_path_witness(g, pc->outcome, d, x, std::nullopt, budget);
          trace = &pc->trace;
        } else {
          qc = find_paths_t10(g, x, y, d, copt);
          rec.constructive = name(qc->outcome.kind);
          problem = detail::validate_pair_witness(g, qc->outcome, d, x, y, budget);
          trace = &qc->trace;
        }
        if (problem.empty()) problem = detail::validate_trace(g, *trace);
      } catch (const BudgetExceeded&) {
        throw;
      } catch (const Error& e) {
        problem = std::string("constructive run failed: ") + e.what();
      }
      if (!problem.empty()) {
        rec.pass = false;
        rec.message = problem;
      }
    }
  }
  rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

struct TheoremTally {
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t errors = 0;
  double worst_seconds = 0;
};

struct SweepError {
  std::size_t index;
  TheoremId theorem;
  std::string graph_text;
  std::vector<Vertex> anchors;
  std::string message;
};

struct SweepReport {
  std::size_t instances = 0;
  std::map<TheoremId, TheoremTally> tallies;
  std::vector<VerificationRecord> failures;
  std::vector<SweepError> errors;
  double seconds = 0;

  std::size_t failure_count() const {
    std::size_t n = 0;
    for (const auto& [t, tally] : tallies) n += tally.failed;
    return n;
  }
  std::size_t error_count() const { return errors.size(); }
  bool clean() const { return failure_count() == 0 && errors.empty(); }
};

struct SweepOptions {
  std::vector<TheoremId> theorems{kAllTheorems.begin(), kAllTheorems.end()};
  int jobs = 1;
  VerifyOptions verify;
  std::size_t batch_size = 2048;
  /// Receives every record in instance order (optional).
  std::function<void(std::size_t, const VerificationRecord&)> on_record;
};

struct SweepInstance {
  WeightedGraph graph;
  std::vector<Vertex> anchors;  // x, y; theorems use a prefix
};

/// Streams instances through verify_instance, `jobs` at a time, merging
/// results in instance order.
class SweepRunner {
 public:
  explicit SweepRunner(SweepOptions options) : options_(std::move(options)) {
    for (TheoremId t : options_.theorems) report_.tallies[t];
    start_ = std::chrono::steady_clock::now();
  }

  void add(SweepInstance instance) {
    pending_.push_back(std::move(instance));
    if (pending_.size() >= options_.batch_size) flush();
  }

  SweepReport finish() {
    flush();
    report_.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return std::move(report_);
  }

 private:
  struct Outcome {
    std::optional<VerificationRecord> record;
    std::string error;
  };

  void flush() {
    if (pending_.empty()) return;
    const std::size_t per = options_.theorems.size();
    std::vector<Outcome> out(pending_.size() * per);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (std::size_t i; (i = next.fetch_add(1)) < out.size();) {
        const auto& inst = pending_[i / per];
        try {
          out[i].record = verify_instance(inst.graph, inst.anchors, options_.theorems[i % per],
                                          options_.verify);
        } catch (const std::exception& e) {
          out[i].error = e.what();
        }
      }
    };
    const int jobs = std::max(1, options_.jobs);
    if (jobs == 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (int j = 0; j < jobs; ++j) pool.emplace_back(work);
      for (auto& t : pool) t.join();
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
      const std::size_t index = report_.instances + i / per;
      const TheoremId theorem = options_.theorems[i % per];
      TheoremTally& tally = report_.tallies[theorem];
      if (out[i].record) {
        const auto& rec = *out[i].record;
        if (options_.on_record) options_.on_record(index, rec);
        tally.worst_seconds = std::max(tally.worst_seconds, rec.seconds);
        if (rec.pass) {
          ++tally.passed;
        } else {
          ++tally.failed;
          report_.failures.push_back(rec);
        }
      } else {
        ++tally.errors;
        const auto& inst = pending_[i / per];
        std::string text;
        try {
          text = format_graph(inst.graph);
        } catch (const Error&) {
        }
        report_.errors.push_back({index, theorem, text, inst.anchors, out[i].error});
      }
    }
    report_.instances += pending_.size();
    pending_.clear();
  }

  SweepOptions options_;
  SweepReport report_;
  std::vector<SweepInstance> pending_;
  std::chrono::steady_clock::time_point start_;
};

inline SweepReport sweep(const std::vector<SweepInstance>& family, SweepOptions options) {
  SweepRunner runner(std::move(options));
  for (const auto& inst : family) runner.add(inst);
  return runner.finish();
}

/// Every labeled 2-connected graph on each n with weights from `weights`,
/// anchors x = 0, y = 1.
inline SweepReport sweep_exhaustive(const std::vector<int>& ns, const std::vector<Rational>& weights,
                                    SweepOptions options) {
  SweepRunner runner(std::move(options));
  for (int n : ns)
    TwoConnectedEnumeration(n, weights).for_each([&](const WeightedGraph& g) {
      runner.add({g, {0, 1}});
      return true;
    });
  return runner.finish();
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

struct RandomFamily {
  std::size_t count = 0;
  std::vector<int> ns{6, 7};
  std::int64_t min_weight = 0;
  std::int64_t max_weight = 10;
  std::uint64_t seed = 1;
};

/// The i-th draw of a seeded random family; anchors are drawn from the same
/// stream so every instance is reproducible from (seed, i).
inline SweepInstance random_instance(const RandomFamily& f, std::size_t i) {
  if (f.ns.empty()) throw Error("random family needs at least one vertex count");
  const std::uint64_t s = mix_seed(f.seed, i);
  const int n = f.ns[i % f.ns.size()];
  WeightedGraph g = random_two_connected(n, f.min_weight, f.max_weight, s);
  std::mt19937_64 rng(s ^ 0x5bd1e995u);
  std::uniform_int_distribution<int> pick(0, n - 1);
  Vertex x = pick(rng), y = pick(rng);
  while (y == x) y = pick(rng);
  return {std::move(g), {x, y}};
}

inline SweepReport sweep_random(const RandomFamily& family, SweepOptions options) {
  SweepRunner runner(std::move(options));
  for (std::size_t i = 0; i < family.count; ++i) runner.add(random_instance(family, i));
  return runner.finish();
}

// ---------------------------------------------------------------------------
// Counterexample search

enum class ProblemId { P1, P2 };

inline std::string name(ProblemId p) { return p == ProblemId::P1 ? "P1" : "P2"; }

inline ProblemId parse_problem_id(std::string_view text) {
  if (text == "P1") return ProblemId::P1;
  if (text == "P2") return ProblemId::P2;
  throw Error("unknown problem id '" + std::string(text) + "' (expected P1 or P2)");
}

inline ConditionKind condition_of(ProblemId p) {
  return p == ProblemId::P1 ? ConditionKind::QuadSum : ConditionKind::QuadMax;
}

/// A graph satisfying the four-vertex hypothesis at d with no path of weight
/// >= d and no Hamilton path.
struct CounterexampleCertificate {
  ProblemId problem;
  std::string graph_text;
  ExtendedRational d_star;
  Rational d{0};
  Rational heaviest_weight{0};
  Path heaviest_witness;
};

/// Decides whether g refutes the problem's statement. For a vacuous
/// hypothesis the threshold is one more than the heaviest path.
inline std::optional<CounterexampleCertificate> check_counterexample(const WeightedGraph& g,
                                                                     ProblemId problem,
                                                                     const OracleBudget& budget = {}) {
  if (!is_two_connected(g)) return std::nullopt;
  const auto report = d_star(g, condition_of(problem), {});
  if (!report.d_star.is_infinite() && report.d_star.value() <= 0) return std::nullopt;
  const auto heaviest = heaviest_path(g, budget);
  const Rational d = report.d_star.is_infinite() ? heaviest.weight + 1 : report.d_star.value();
  if (heaviest.weight >= d) return std::nullopt;
  if (hamilton_path(g, budget)) return std::nullopt;
  return CounterexampleCertificate{problem, format_graph(g), report.d_star, d, heaviest.weight,
                                   heaviest.path};
}

/// Re-derives a certificate from its graph text alone.
inline bool verify_certificate(const CounterexampleCertificate& c, const OracleBudget& budget = {}) {
  try {
    const WeightedGraph g = parse_graph(c.graph_text);
    if (!is_two_connected(g)) return false;
    if (!hypothesis_holds(g, condition_of(c.problem), {}, c.d)) return false;
    if (heaviest_path(g, budget).weight >= c.d) return false;
    return !hamilton_path(g, budget).has_value();
  } catch (const Error&) {
    return false;
  }
}

struct SearchOptions {
  ProblemId problem = ProblemId::P1;
  int exhaustive_max_n = 5;
  std::vector<Rational> weights{Rational(1), Rational(2)};
  RandomFamily random{0, {6, 7}, 0, 10, 1};
  OracleBudget budget;
  int jobs = 1;
  std::size_t batch_size = 1024;
};

struct SearchStats {
  std::size_t exhaustive_instances = 0;
  std::size_t random_instances = 0;
  std::size_t vacuous = 0;
  std::size_t budget_skipped = 0;
};

struct SearchResult {
  std::optional<CounterexampleCertificate> certificate;
  bool certificate_verified = false;
  SearchStats stats;
};

/// Exhaustive pass over n = 3..exhaustive_max_n, then the random draws.
/// Stops at the first certificate in family order, which is re-verified
/// from scratch. Batches are checked `jobs` at a time.
inline SearchResult search_counterexample(const SearchOptions& opt) {
  SearchResult res;
  struct Slot {
    bool vacuous = false;
    bool skipped = false;
    std::optional<CounterexampleCertificate> certificate;
  };
  std::vector<WeightedGraph> batch;
  // Returns the number of graphs consumed (all, or up to the certificate).
  auto run_batch = [&]() -> std::size_t {
    std::vector<Slot> slots(batch.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (std::size_t i; (i = next.fetch_add(1)) < batch.size();) {
        try {
          slots[i].vacuous = d_star(batch[i], condition_of(opt.problem), {}).d_star.is_infinite();
          slots[i].certificate = check_counterexample(batch[i], opt.problem, opt.budget);
        } catch (const BudgetExceeded&) {
          slots[i].skipped = true;
        }
      }
    };
    if (opt.jobs <= 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (int j = 0; j < opt.jobs; ++j) pool.emplace_back(work);
      for (auto& t : pool) t.join();
    }
    std::size_t used = 0;
    for (const auto& slot : slots) {
      ++used;
      res.stats.vacuous += slot.vacuous;
      res.stats.budget_skipped += slot.skipped;
      if (slot.certificate) {
        res.certificate = slot.certificate;
        break;
      }
    }
    batch.clear();
    return used;
  };

  for (int n = 3; n <= opt.exhaustive_max_n && !res.certificate; ++n) {
    TwoConnectedEnumeration(n, opt.weights).for_each([&](const WeightedGraph& g) {
      batch.push_back(g);
      if (batch.size() >= opt.batch_size) res.stats.exhaustive_instances += run_batch();
      return !res.certificate.has_value();
    });
    if (!res.certificate && !batch.empty()) res.stats.exhaustive_instances += run_batch();
  }
  for (std::size_t i = 0; i < opt.random.count && !res.certificate;) {
    for (; i < opt.random.count && batch.size() < opt.batch_size; ++i)
      batch.push_back(random_instance(opt.random, i).graph);
    res.stats.random_instances += run_batch();
  }
  if (res.certificate) res.certificate_verified = verify_certificate(*res.certificate, opt.budget);
  return res;
}

}  // namespace heavypath
