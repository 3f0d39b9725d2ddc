// Acceptance run: one PASS/FAIL line per criterion. Exit status is non-zero
// when any criterion fails.

#include "heavypath/heavypath.hpp"
#include "support/naive_oracle.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <thread>

using namespace heavypath;

namespace {

struct Verdict {
  bool pass;
  std::string detail;
};

int jobs() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

int failures = 0;

void criterion(int id, const char* title, double limit_seconds, const std::function<Verdict()>& f) {
  const auto t0 = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = f();
  } catch (const std::exception& e) {
    v = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > limit_seconds) {
    v.pass = false;
    v.detail += "; over time limit";
  }
  if (!v.pass) ++failures;
  std::printf("CRITERION %d %s: %s  (%.2f s, limit %.0f s)  %s\n", id, title,
              v.pass ? "PASS" : "FAIL", secs, limit_seconds, v.detail.c_str());
  std::fflush(stdout);
}

std::string sweep_summary(const SweepReport& r) {
  std::ostringstream os;
  os << r.instances << " instances";
  for (const auto& [t, tally] : r.tallies)
    os << ", " << name(t) << " " << tally.passed << "/" << tally.failed << "/" << tally.errors;
  os << " (passed/failed/errors)";
  if (!r.failures.empty())
    os << "; first failure " << name(r.failures[0].theorem) << ": " << r.failures[0].message;
  if (!r.errors.empty()) os << "; first error: " << r.errors[0].message;
  return os.str();
}

Verdict fig1_regression() {
  const auto g = fig1_graph();
  const Vertex xy[] = {fig1_ids::x, fig1_ids::y};
  const auto ds = d_star(g, ConditionKind::PairMaxDist2, xy).d_star;
  const auto heavy = heaviest_xy_path(g, fig1_ids::x, fig1_ids::y);
  const bool ham = hamilton_xy_path(g, fig1_ids::x, fig1_ids::y).has_value();
  const bool ok = ds == ExtendedRational(Rational(5)) && heavy && heavy->weight == Rational(4) && !ham;
  return {ok, "d* = " + ds.str() + ", heaviest (x,y) = " + (heavy ? to_string(heavy->weight) : "none") +
                  ", Hamilton (x,y) = " + (ham ? "present" : "none")};
}

Verdict two_cliques_refutation() {
  const auto g = cliques_sharing_pair({4, 4});
  const Vertex xy[] = {0, 1};
  const auto ds = d_star(g, ConditionKind::TripleSum, xy).d_star;
  const auto heavy = heaviest_xy_path(g, 0, 1);
  const bool ham = hamilton_xy_path(g, 0, 1).has_value();
  const bool span = spanning_disjoint_pair(g, 0, 1).has_value();
  const bool ok = ds.is_infinite() && heavy && heavy->weight == Rational(0) && !ham && span;
  return {ok, "d* = " + ds.str() + ", heaviest (x,y) = " + (heavy ? to_string(heavy->weight) : "none") +
                  ", Hamilton (x,y) = " + (ham ? "present" : "none") +
                  ", spanning pair = " + (span ? "present" : "none")};
}

Verdict three_cliques_refutation() {
  const auto g = cliques_sharing_pair({3, 3, 3});
  const Vertex xs[] = {0};
  const auto ds = d_star(g, ConditionKind::QuadSum, xs).d_star;
  const auto heavy = heaviest_x_path(g, 0);
  const bool ham = hamilton_x_path(g, 0).has_value();
  const bool ok = ds.is_infinite() && heavy.weight == Rational(0) && !ham;
  return {ok, "d* = " + ds.str() + ", heaviest x-path = " + to_string(heavy.weight) +
                  ", Hamilton x-path = " + (ham ? "present" : "none")};
}

Verdict exhaustive_sweep() {
  SweepOptions opt;
  opt.jobs = jobs();
  std::size_t constructive = 0;
  opt.on_record = [&](std::size_t, const VerificationRecord& r) { constructive += r.constructive.has_value(); };
  const auto r = sweep_exhaustive({3, 4, 5}, {Rational(1), Rational(2)}, opt);
  const std::size_t expected_constructive = 5 * r.instances;  // T5, T7, T8, T9, T10
  const bool ok = r.clean() && r.instances > 0 && constructive == expected_constructive;
  return {ok, sweep_summary(r) + "; constructive witnesses re-validated: " + std::to_string(constructive)};
}

Verdict random_sweep() {
  SweepOptions opt;
  opt.jobs = jobs();
  opt.theorems = {TheoremId::T5, TheoremId::T8, TheoremId::T10};
  std::size_t constructive = 0;
  opt.on_record = [&](std::size_t, const VerificationRecord& r) { constructive += r.constructive.has_value(); };
  const auto r = sweep_random(RandomFamily{10000, {6, 7}, 0, 10, 1}, opt);
  const bool ok = r.clean() && r.instances == 10000 && constructive == 30000;
  return {ok, sweep_summary(r) + "; constructive witnesses re-validated: " + std::to_string(constructive)};
}

Verdict oracle_vs_enumeration() {
  std::size_t checked = 0, mismatches = 0;
  std::string first;
  for (std::uint64_t i = 0; i < 500; ++i) {
    const int n = 3 + static_cast<int>(i % 5);
    const auto g = random_two_connected(n, 0, 10, mix_seed(2024, i));
    const Vertex x = 0, y = n - 1;
    auto note = [&](const char* what) {
      if (mismatches++ == 0) first = std::string(what) + " on\n" + format_graph(g);
    };
    const auto p = heaviest_xy_path(g, x, y);
    const auto q = naive::heaviest_xy(g, x, y);
    if (p.has_value() != q.has_value() || (p && p->weight != *q)) note("heaviest_xy_path");
    if (heaviest_x_path(g, x).weight != naive::heaviest_x(g, x)) note("heaviest_x_path");
    const auto c = heaviest_cycle(g);
    const auto nc = naive::heaviest_cycle(g);
    if (c.has_value() != nc.has_value() || (c && c->weight != *nc)) note("heaviest_cycle");
    if (best_disjoint_pair(g, x, y).weight != naive::disjoint_pairs(g, x, y).best)
      note("best_disjoint_pair");
    ++checked;
  }
  return {mismatches == 0, std::to_string(checked) + " graphs, " + std::to_string(mismatches) +
                               " mismatches" + (first.empty() ? "" : "; first: " + first)};
}

Verdict condition_lattice() {
  std::size_t instances = 0, violations = 0;
  using K = ConditionKind;
  for (int n : {3, 4, 5}) {
    TwoConnectedEnumeration(n, {Rational(1), Rational(2)}).for_each([&](const WeightedGraph& g) {
      auto ds = [&](K k) { return d_star(g, k, std::span<const Vertex>{}).d_star; };
      const auto dirac = ds(K::DiracMin), ore = ds(K::OrePairSum), pmax = ds(K::PairMax),
                 tsum = ds(K::TripleSum), tmax = ds(K::TripleMax), qsum = ds(K::QuadSum),
                 qmax = ds(K::QuadMax);
      const bool ok = dirac <= ore && ore <= pmax && pmax <= tmax && ore <= tsum && tsum <= tmax &&
                      tmax <= qmax && tsum <= qsum;
      violations += !ok;
      ++instances;
      return true;
    });
  }
  return {violations == 0, std::to_string(instances) + " instances, " + std::to_string(violations) +
                               " violations"};
}

Verdict problem_search() {
  std::ostringstream os;
  bool ok = true;
  for (ProblemId p : {ProblemId::P1, ProblemId::P2}) {
    SearchOptions opt;
    opt.problem = p;
    opt.exhaustive_max_n = 5;
    opt.weights = {Rational(1), Rational(2)};
    opt.random.count = 0;
    opt.jobs = jobs();
    const auto res = search_counterexample(opt);
    os << name(p) << ": " << res.stats.exhaustive_instances << " instances ("
       << res.stats.vacuous << " vacuous, " << res.stats.budget_skipped << " over budget), ";
    if (res.certificate) {
      os << "certificate " << (res.certificate_verified ? "re-verified" : "NOT re-verified") << "\n"
         << res.certificate->graph_text;
      ok = ok && res.certificate_verified;
    } else {
      os << "none found";
    }
    ok = ok && res.stats.budget_skipped == 0;
    os << "; ";
  }
  return {ok, os.str()};
}

}  // namespace

int main() {
  criterion(1, "fig1 regression", 1, fig1_regression);
  criterion(2, "two-cliques (4,4) refutation", 1, two_cliques_refutation);
  criterion(3, "three-cliques (3,3,3) refutation", 1, three_cliques_refutation);
  criterion(4, "exhaustive sweep n<=5 weights {1,2} T1-T10", 600, exhaustive_sweep);
  criterion(5, "random sweep 10000 n in {6,7} weights 0..10 T5/T8/T10", 1800, random_sweep);
  criterion(6, "pruned oracle equals full enumeration (500 graphs, n<=7)", 600, oracle_vs_enumeration);
  criterion(7, "condition lattice over the exhaustive family", 600, condition_lattice);
  criterion(8, "P1/P2 counterexample search n<=5 weights {1,2}", 600, problem_search);
  std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
