#pragma once

// Command-line front end. Exit status: 0 success, 1 verification failure or
// counterexample found, 2 usage, parse or input errors.

#include "heavypath/heavypath.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace heavypath::cli {

using nlohmann::json;

enum ExitCode { kOk = 0, kFailed = 1, kUsage = 2 };

struct Common {
  std::string graph;
  std::optional<int> x;
  std::optional<int> y;
  std::optional<std::string> d;
  std::string theorem;
  std::uint64_t seed = 1;
  std::optional<std::uint64_t> budget;
  bool json = false;
  bool force = false;
  int jobs = 1;
};

inline OracleBudget make_budget(const Common& c) {
  OracleBudget b;
  b.node_limit = c.budget;
  return b;
}

inline std::string witness_text(const Path& p) { return p.str(); }

inline json rational_json(const Rational& r) { return to_string(r); }

inline json path_entry(const WeightedGraph& g, const Path& p) {
  return json{{"vertices", p.vertices()}, {"weight", to_string(weight_of(g, p))}};
}

inline std::vector<Rational> parse_weight_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) out.push_back(parse_rational(item));
  if (out.empty()) throw Error("empty weight list");
  return out;
}

inline std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error("'" + item + "' is not an integer");
    }
  }
  if (out.empty()) throw Error("empty integer list");
  return out;
}

inline std::vector<TheoremId> parse_theorems(const std::string& text) {
  if (text.empty() || text == "all") return {kAllTheorems.begin(), kAllTheorems.end()};
  std::vector<TheoremId> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) out.push_back(parse_theorem_id(item));
  return out;
}

inline Vertex require_anchor(const std::optional<int>& v, const char* flag) {
  if (!v) throw Error(std::string("missing ") + flag);
  return *v;
}

inline double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

inline json d_star_json(const WeightedGraph& g, std::span<const Vertex> excluded) {
  json out = json::object();
  for (ConditionKind k : kAllConditionKinds)
    out[std::string(name(k))] = d_star(g, k, excluded).d_star.str();
  return out;
}

// --- oracle -----------------------------------------------------------------

inline int cmd_oracle(const Common& c, std::ostream& out) {
  const auto t0 = std::chrono::steady_clock::now();
  const WeightedGraph g = read_graph_file(c.graph);
  const OracleBudget budget = make_budget(c);
  json doc{{"command", "oracle"}, {"inputs", {{"graph", c.graph}}}};
  json results = json::object();
  std::ostringstream text;
  auto report_path = [&](const std::string& key, const std::optional<Path>& p,
                         const std::optional<Rational>& w) {
    if (p) {
      results[key] = {{"vertices", p->vertices()}, {"weight", to_string(w.value_or(weight_of(g, *p)))}};
      text << key << ": " << to_string(w.value_or(weight_of(g, *p))) << "  [" << p->str() << "]\n";
    } else {
      results[key] = nullptr;
      text << key << ": none\n";
    }
  };
  if (c.x) {
    doc["inputs"]["x"] = *c.x;
    auto hx = heaviest_x_path(g, *c.x, budget);
    report_path("heaviest_x_path", hx.path, hx.weight);
    report_path("hamilton_x_path", hamilton_x_path(g, *c.x, budget), std::nullopt);
  }
  if (c.x && c.y) {
    doc["inputs"]["y"] = *c.y;
    auto hxy = heaviest_xy_path(g, *c.x, *c.y, budget);
    report_path("heaviest_xy_path", hxy ? std::optional<Path>(hxy->path) : std::nullopt,
                hxy ? std::optional<Rational>(hxy->weight) : std::nullopt);
    report_path("hamilton_xy_path", hamilton_xy_path(g, *c.x, *c.y, budget), std::nullopt);
    auto pair = best_disjoint_pair(g, *c.x, *c.y, budget);
    results["best_disjoint_pair"] = {{"weight", to_string(pair.weight)},
                                     {"first", pair.first.vertices()},
                                     {"second", pair.second.vertices()}};
    text << "best_disjoint_pair: " << to_string(pair.weight) << "  [" << pair.first.str()
         << "] [" << pair.second.str() << "]\n";
    auto span = spanning_disjoint_pair(g, *c.x, *c.y, budget);
    if (span) {
      results["spanning_disjoint_pair"] = {{"first", span->first.vertices()},
                                           {"second", span->second.vertices()}};
      text << "spanning_disjoint_pair: [" << span->first.str() << "] [" << span->second.str()
           << "]\n";
    } else {
      results["spanning_disjoint_pair"] = nullptr;
      text << "spanning_disjoint_pair: none\n";
    }
  }
  auto hp = heaviest_path(g, budget);
  report_path("heaviest_path", hp.path, hp.weight);
  report_path("hamilton_path", hamilton_path(g, budget), std::nullopt);
  auto hc = heaviest_cycle(g, budget);
  report_path("heaviest_cycle", hc ? std::optional<Path>(hc->cycle) : std::nullopt,
              hc ? std::optional<Rational>(hc->weight) : std::nullopt);
  report_path("hamilton_cycle", hamilton_cycle(g, budget), std::nullopt);
  if (c.json) {
    doc["outcome"] = results;
    doc["timings"] = {{"seconds", seconds_since(t0)}};
    out << doc.dump(2) << '\n';
  } else {
    out << text.str();
  }
  return kOk;
}

// --- construct ----------------------------------------------------------------

inline int cmd_construct(const Common& c, bool show_trace, std::ostream& out) {
  const auto t0 = std::chrono::steady_clock::now();
  const WeightedGraph g = read_graph_file(c.graph);
  const TheoremId theorem = parse_theorem_id(c.theorem);
  if (theorem != TheoremId::T5 && theorem != TheoremId::T8 && theorem != TheoremId::T10)
    throw Error("construct supports T5, T8 and T10");
  const Vertex x = require_anchor(c.x, "--x");
  std::optional<Vertex> y;
  if (theorem != TheoremId::T8) y = require_anchor(c.y, "--y");
  std::vector<Vertex> excluded{x};
  if (y) excluded.push_back(*y);
  const ConditionKind kind = condition_of(theorem);
  const auto report = d_star(g, kind, excluded);
  Rational d;
  if (c.d) {
    d = parse_rational(*c.d);
  } else {
    d = report.d_star.is_infinite() ? vacuous_threshold(g) : report.d_star.value();
  }
  const bool beyond = ExtendedRational(d) > report.d_star;
  ConstructOptions options{make_budget(c), c.force};

  std::string kind_name;
  std::vector<Path> witnesses;
  TraceStep trace;
  if (theorem == TheoremId::T5) {
    auto r = find_path_t5(g, x, *y, d, options);
    kind_name = name(r.outcome.kind);
    witnesses = {r.outcome.path};
    trace = std::move(r.trace);
  } else if (theorem == TheoremId::T8) {
    auto r = find_path_t8(g, x, d, options);
    kind_name = name(r.outcome.kind);
    witnesses = {r.outcome.path};
    trace = std::move(r.trace);
  } else {
    auto r = find_paths_t10(g, x, *y, d, options);
    kind_name = name(r.outcome.kind);
    witnesses = {r.outcome.first};
    if (r.outcome.kind != PairConclusion::HeavyXYPath) witnesses.push_back(r.outcome.second);
    trace = std::move(r.trace);
  }

  if (c.json) {
    json doc{{"command", "construct"},
             {"inputs", {{"graph", c.graph}, {"theorem", name(theorem)}, {"x", x}, {"d", to_string(d)}}},
             {"d_star", {{std::string(name(kind)), report.d_star.str()}}},
             {"outcome", kind_name},
             {"guarantee", beyond ? "void (d exceeds d*)" : "holds"}};
    if (y) doc["inputs"]["y"] = *y;
    json ws = json::array();
    for (const auto& p : witnesses) ws.push_back(path_entry(g, p));
    doc["witnesses"] = ws;
    doc["trace"] = trace_json(trace);
    doc["timings"] = {{"seconds", seconds_since(t0)}};
    out << doc.dump(2) << '\n';
  } else {
    out << "d* (" << name(kind) << ") = " << report.d_star.str() << ", d = " << to_string(d) << '\n';
    if (beyond) out << "warning: d exceeds d*; the guarantee is void\n";
    out << kind_name << '\n';
    for (const auto& p : witnesses)
      out << witness_text(p) << "  (weight " << to_string(weight_of(g, p)) << ")\n";
    if (show_trace) out << format_trace(trace);
  }
  return kOk;
}

// --- verify -------------------------------------------------------------------

inline json record_json(const VerificationRecord& r) {
  json j{{"graph_id", r.graph_id},
         {"theorem", name(r.theorem)},
         {"anchors", r.anchors},
         {"d_star", r.d_star.str()},
         {"d", to_string(r.d)},
         {"feasible", r.feasible},
         {"pass", r.pass},
         {"seconds", r.seconds}};
  if (r.constructive) j["constructive"] = *r.constructive;
  if (!r.pass) {
    j["message"] = r.message;
    j["graph"] = r.graph_text;
  }
  return j;
}

inline int cmd_verify(const Common& c, std::ostream& out) {
  const auto t0 = std::chrono::steady_clock::now();
  const WeightedGraph g = read_graph_file(c.graph);
  const auto theorems = parse_theorems(c.theorem);
  std::vector<Vertex> anchors;
  if (c.x) anchors.push_back(*c.x);
  if (c.y) anchors.push_back(*c.y);
  VerifyOptions options{make_budget(c), true};
  bool all_pass = true;
  json records = json::array();
  for (TheoremId t : theorems) {
    if (static_cast<int>(anchors.size()) < anchor_count(t))
      throw Error(name(t) + " needs " + std::to_string(anchor_count(t)) + " anchor(s): pass --x" +
                  (anchor_count(t) == 2 ? " and --y" : ""));
    auto rec = verify_instance(g, anchors, t, options);
    all_pass = all_pass && rec.pass;
    if (c.json) {
      records.push_back(record_json(rec));
    } else {
      out << name(t) << ": " << (rec.pass ? "pass" : "FAIL") << "  d* = " << rec.d_star.str()
          << ", d = " << to_string(rec.d) << ", holds: ";
      for (std::size_t i = 0; i < rec.feasible.size(); ++i)
        out << (i ? ", " : "") << rec.feasible[i];
      if (rec.feasible.empty()) out << "none";
      if (rec.constructive) out << "; constructive: " << *rec.constructive;
      if (!rec.pass) out << "; " << rec.message;
      out << '\n';
    }
  }
  if (c.json) {
    json doc{{"command", "verify"},
             {"inputs", {{"graph", c.graph}, {"theorem", c.theorem}, {"anchors", anchors}}},
             {"outcome", all_pass ? "pass" : "fail"},
             {"records", records},
             {"timings", {{"seconds", seconds_since(t0)}}}};
    out << doc.dump(2) << '\n';
  }
  return all_pass ? kOk : kFailed;
}

// --- sweep --------------------------------------------------------------------

struct SweepArgs {
  std::string ns = "3,4,5";
  std::string weights = "1,2";
  std::size_t random = 0;
  std::int64_t min_weight = 0;
  std::int64_t max_weight = 10;
};

inline int cmd_sweep(const Common& c, const SweepArgs& a, std::ostream& out) {
  SweepOptions options;
  options.theorems = parse_theorems(c.theorem);
  options.jobs = c.jobs;
  options.verify.budget = make_budget(c);
  if (c.json)
    options.on_record = [&](std::size_t index, const VerificationRecord& r) {
      json j = record_json(r);
      j["index"] = index;
      out << j.dump() << '\n';
    };
  const auto ns = parse_int_list(a.ns);
  SweepReport report;
  if (a.random > 0) {
    RandomFamily family{a.random, ns, a.min_weight, a.max_weight, c.seed};
    report = sweep_random(family, options);
  } else {
    report = sweep_exhaustive(ns, parse_weight_list(a.weights), options);
  }
  if (c.json) {
    json summary{{"command", "sweep"}, {"instances", report.instances},
                 {"failures", report.failure_count()}, {"errors", report.error_count()},
                 {"timings", {{"seconds", report.seconds}}}};
    json per = json::object();
    for (const auto& [t, tally] : report.tallies)
      per[name(t)] = {{"passed", tally.passed}, {"failed", tally.failed},
                      {"errors", tally.errors}, {"worst_seconds", tally.worst_seconds}};
    summary["theorems"] = per;
    json errs = json::array();
    for (const auto& e : report.errors)
      errs.push_back({{"index", e.index}, {"theorem", name(e.theorem)}, {"message", e.message},
                      {"graph", e.graph_text}, {"anchors", e.anchors}});
    summary["error_entries"] = errs;
    out << summary.dump() << '\n';
  } else {
    out << "instances: " << report.instances << "  (" << report.seconds << " s)\n";
    out << "theorem     passed   failed   errors   worst s\n";
    for (const auto& [t, tally] : report.tallies) {
      std::ostringstream row;
      row << name(t);
      std::string label = row.str();
      label.resize(8, ' ');
      out << label << std::setw(10) << tally.passed << std::setw(9) << tally.failed
          << std::setw(9) << tally.errors << "   " << tally.worst_seconds << '\n';
    }
    for (const auto& f : report.failures) {
      out << "\nFAIL " << name(f.theorem) << " anchors";
      for (Vertex v : f.anchors) out << ' ' << v;
      out << ": " << f.message << '\n' << f.graph_text;
    }
    for (const auto& e : report.errors)
      out << "\nERROR #" << e.index << ' ' << name(e.theorem) << ": " << e.message << '\n'
          << e.graph_text;
  }
  return report.clean() ? kOk : kFailed;
}

// --- search -------------------------------------------------------------------

struct SearchArgs {
  std::string problem = "P1";
  int max_n = 5;
  std::string weights = "1,2";
  std::size_t random = 0;
  std::string ns = "6,7";
  std::int64_t min_weight = 0;
  std::int64_t max_weight = 10;
};

inline int cmd_search(const Common& c, const SearchArgs& a, std::ostream& out) {
  SearchOptions opt;
  opt.problem = parse_problem_id(a.problem);
  opt.exhaustive_max_n = a.max_n;
  opt.weights = parse_weight_list(a.weights);
  opt.random = RandomFamily{a.random, parse_int_list(a.ns), a.min_weight, a.max_weight, c.seed};
  opt.budget = make_budget(c);
  opt.jobs = c.jobs;
  const auto t0 = std::chrono::steady_clock::now();
  const auto res = search_counterexample(opt);
  const double secs = seconds_since(t0);
  if (c.json) {
    json doc{{"command", "search"},
             {"inputs", {{"problem", a.problem}, {"max_n", a.max_n}, {"weights", a.weights},
                         {"random", a.random}, {"seed", c.seed}}},
             {"stats", {{"exhaustive_instances", res.stats.exhaustive_instances},
                        {"random_instances", res.stats.random_instances},
                        {"vacuous", res.stats.vacuous},
                        {"budget_skipped", res.stats.budget_skipped}}},
             {"timings", {{"seconds", secs}}}};
    if (res.certificate) {
      const auto& cert = *res.certificate;
      doc["outcome"] = "certificate";
      doc["certificate"] = {{"graph", cert.graph_text}, {"d_star", cert.d_star.str()},
                            {"d", to_string(cert.d)},
                            {"heaviest_path_weight", to_string(cert.heaviest_weight)},
                            {"heaviest_path", cert.heaviest_witness.vertices()},
                            {"hamilton_path", nullptr},
                            {"reverified", res.certificate_verified}};
    } else {
      doc["outcome"] = "none found";
    }
    out << doc.dump(2) << '\n';
  } else {
    out << "examined " << res.stats.exhaustive_instances << " exhaustive and "
        << res.stats.random_instances << " random instances (" << res.stats.vacuous
        << " vacuous, " << res.stats.budget_skipped << " over budget) in " << secs << " s\n";
    if (res.certificate) {
      const auto& cert = *res.certificate;
      out << "counterexample for " << name(cert.problem) << ": d* = " << cert.d_star.str()
          << ", d = " << to_string(cert.d) << ", heaviest path " << to_string(cert.heaviest_weight)
          << " [" << cert.heaviest_witness.str() << "], no Hamilton path; re-verified: "
          << (res.certificate_verified ? "yes" : "NO") << '\n'
          << cert.graph_text;
    } else {
      out << "none found\n";
    }
  }
  return res.certificate ? kFailed : kOk;
}

// --- fixture ------------------------------------------------------------------

inline int cmd_fixture(const Common& c, const std::string& fixture_name, const std::string& sizes,
                       const std::optional<std::string>& emit, std::ostream& out) {
  const Fixture f = make_fixture(fixture_name, sizes.empty() ? std::vector<int>{} : parse_int_list(sizes));
  if (emit) {
    const std::string text = format_graph(f.graph, f.name + (f.parameters.empty() ? "" : " " + f.parameters));
    if (*emit == "-") {
      out << text;
    } else {
      std::ofstream file(*emit);
      if (!file) throw Error("cannot write '" + *emit + "'");
      file << text;
    }
    if (*emit == "-") return kOk;
  }
  const auto results = check_fixture(f);
  bool ok = true;
  for (const auto& r : results) ok = ok && r.passed;
  const WeightedGraph& g = f.graph;
  if (c.json) {
    json doc{{"command", "fixture"}, {"inputs", {{"name", f.name}, {"parameters", f.parameters}}}};
    doc["anchors"] = f.anchors;
    doc["d_star"] = d_star_json(g, f.anchors);
    json oracle = json::object();
    const Vertex x = f.anchors[0];
    auto hx = heaviest_x_path(g, x);
    oracle["heaviest_x_path"] = path_entry(g, hx.path);
    auto hamx = hamilton_x_path(g, x);
    oracle["hamilton_x_path"] = hamx ? json(hamx->vertices()) : json(nullptr);
    if (f.anchors.size() >= 2) {
      const Vertex y = f.anchors[1];
      auto hxy = heaviest_xy_path(g, x, y);
      oracle["heaviest_xy_path"] = hxy ? path_entry(g, hxy->path) : json(nullptr);
      auto ham = hamilton_xy_path(g, x, y);
      oracle["hamilton_xy_path"] = ham ? json(ham->vertices()) : json(nullptr);
      auto span = spanning_disjoint_pair(g, x, y);
      oracle["spanning_disjoint_pair"] =
          span ? json{span->first.vertices(), span->second.vertices()} : json(nullptr);
    }
    doc["oracle"] = oracle;
    json props = json::array();
    for (const auto& r : results) props.push_back({{"property", r.description}, {"pass", r.passed}});
    doc["properties"] = props;
    doc["outcome"] = ok ? "pass" : "fail";
    out << doc.dump(2) << '\n';
  } else {
    out << f.name << (f.parameters.empty() ? "" : " (" + f.parameters + ")") << ": "
        << g.vertex_count() << " vertices, " << g.edge_count() << " edges\n";
    for (const auto& r : results) out << (r.passed ? "  pass  " : "  FAIL  ") << r.description << '\n';
  }
  return ok ? kOk : kFailed;
}

// --- check-format -------------------------------------------------------------

inline int cmd_check_format(const Common& c, std::ostream& out) {
  const WeightedGraph g = read_graph_file(c.graph);
  const bool biconnected = is_two_connected(g);
  if (c.json) {
    json doc{{"command", "check-format"}, {"inputs", {{"graph", c.graph}}},
             {"outcome", "ok"}, {"vertices", g.vertex_count()}, {"edges", g.edge_count()},
             {"total_weight", to_string(total_weight(g))}, {"two_connected", biconnected}};
    out << doc.dump(2) << '\n';
  } else {
    out << c.graph << ": ok, " << g.vertex_count() << " vertices, " << g.edge_count()
        << " edges, total weight " << to_string(total_weight(g))
        << (biconnected ? ", 2-connected" : ", not 2-connected") << '\n';
  }
  return kOk;
}

// --- entry point --------------------------------------------------------------

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Heavy paths in 2-connected weighted graphs"};
  app.require_subcommand(1);
  Common c;

  auto add_graph = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--graph", c.graph, "graph file");
    if (required) opt->required();
  };
  auto add_anchors = [&](CLI::App* sub) {
    sub->add_option("--x", c.x, "anchor x");
    sub->add_option("--y", c.y, "anchor y");
  };
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget", c.budget, "search-node limit per oracle call");
  };
  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", c.json, "structured output"); };

  auto* oracle = app.add_subcommand("oracle", "exact heaviest/Hamilton searches");
  add_graph(oracle, true);
  add_anchors(oracle);
  add_budget(oracle);
  add_json(oracle);

  bool show_trace = false;
  auto* construct = app.add_subcommand("construct", "run a constructive algorithm");
  add_graph(construct, true);
  add_anchors(construct);
  construct->add_option("--theorem", c.theorem, "T5, T8 or T10")->required();
  construct->add_option("--d", c.d, "threshold (p/q or decimal); default d*");
  construct->add_flag("--force", c.force, "allow d above d*");
  construct->add_flag("--trace", show_trace, "print the recursion trace");
  add_budget(construct);
  add_json(construct);

  auto* verify = app.add_subcommand("verify", "check a theorem at d = d*");
  add_graph(verify, true);
  add_anchors(verify);
  verify->add_option("--theorem", c.theorem, "T1..T10, comma list or 'all'")->required();
  add_budget(verify);
  add_json(verify);

  SweepArgs sweep_args;
  auto* sweep_cmd = app.add_subcommand("sweep", "verify theorems over an instance family");
  sweep_cmd->add_option("--theorem", c.theorem, "theorem list (default all)");
  sweep_cmd->add_option("--n", sweep_args.ns, "vertex counts, comma separated");
  sweep_cmd->add_option("--weights", sweep_args.weights, "weight set for exhaustive families");
  sweep_cmd->add_option("--random", sweep_args.random, "number of random instances instead");
  sweep_cmd->add_option("--min-weight", sweep_args.min_weight, "random weight lower bound");
  sweep_cmd->add_option("--max-weight", sweep_args.max_weight, "random weight upper bound");
  sweep_cmd->add_option("--seed", c.seed, "random seed");
  sweep_cmd->add_option("--jobs", c.jobs, "worker threads")->check(CLI::PositiveNumber);
  add_budget(sweep_cmd);
  add_json(sweep_cmd);

  SearchArgs search_args;
  auto* search = app.add_subcommand("search", "look for counterexamples to P1 or P2");
  search->add_option("--problem", search_args.problem, "P1 or P2");
  search->add_option("--max-n", search_args.max_n, "largest n of the exhaustive phase");
  search->add_option("--weights", search_args.weights, "weight set of the exhaustive phase");
  search->add_option("--random", search_args.random, "number of random draws");
  search->add_option("--n", search_args.ns, "vertex counts of the random phase");
  search->add_option("--min-weight", search_args.min_weight, "random weight lower bound");
  search->add_option("--max-weight", search_args.max_weight, "random weight upper bound");
  search->add_option("--seed", c.seed, "random seed");
  search->add_option("--jobs", c.jobs, "worker threads")->check(CLI::PositiveNumber);
  add_budget(search);
  add_json(search);

  std::string fixture_name;
  std::string fixture_sizes;
  std::optional<std::string> emit;
  auto* fixture = app.add_subcommand("fixture", "build and check a named fixture");
  fixture->add_option("name", fixture_name, "fig1, two-cliques or three-cliques")->required();
  fixture->add_option("--sizes", fixture_sizes, "part sizes, comma separated");
  fixture->add_option("--emit", emit, "write the graph text to FILE ('-' for stdout)");
  add_json(fixture);

  auto* check = app.add_subcommand("check-format", "parse a graph file");
  add_graph(check, true);
  add_json(check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*oracle) return cmd_oracle(c, out);
    if (*construct) return cmd_construct(c, show_trace, out);
    if (*verify) return cmd_verify(c, out);
    if (*sweep_cmd) return cmd_sweep(c, sweep_args, out);
    if (*search) return cmd_search(c, search_args, out);
    if (*fixture) return cmd_fixture(c, fixture_name, fixture_sizes, emit, out);
    if (*check) return cmd_check_format(c, out);
  } catch (const InternalError& e) {
    err << "error: " << e.what() << '\n';
    return kFailed;
  } catch (const GuaranteeViolated& e) {
    err << "error: " << e.what() << '\n';
    return kFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace heavypath::cli
