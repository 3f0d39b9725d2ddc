#pragma once

// Recursion trace of a constructive run.
//
// Each step owns a list of working paths. Sub-witnesses enter the list via
// `Introduce` (either the result of a child step or a path computed locally,
// e.g. by BFS or the oracle) and are transformed by the remaining rewrite
// operations. The step's result is the final list. `replay` re-executes the
// operations bottom-up from the children's replayed results.

#include "heavypath/graph.hpp"

#include "json.hpp"

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace heavypath {

enum class RewriteOp {
  Introduce,    // push `path` (or slot `slot` of child `child`)
  Prepend,      // insert `vertex` before paths[target]
  Append,       // append `vertex` to paths[target]
  TrimFront,    // drop the first vertex of paths[target]
  TrimBack,     // drop the last vertex of paths[target]
  Reverse,      // reverse paths[target]
  Splice,       // replace contiguous `segment` (either orientation) by `path`
  SplitAtEdge,  // cut paths[target] at edge (vertex, other_vertex); tail is pushed
  Join,         // paths[target] += paths[other] (shared junction merged); erase other
  Swap,         // swap paths[target] and paths[other]
  Discard,      // erase paths[target]
};

inline const char* name(RewriteOp op) {
  switch (op) {
    case RewriteOp::Introduce: return "introduce";
    case RewriteOp::Prepend: return "prepend";
    case RewriteOp::Append: return "append";
    case RewriteOp::TrimFront: return "trim-front";
    case RewriteOp::TrimBack: return "trim-back";
    case RewriteOp::Reverse: return "reverse";
    case RewriteOp::Splice: return "splice";
    case RewriteOp::SplitAtEdge: return "split-at-edge";
    case RewriteOp::Join: return "join";
    case RewriteOp::Swap: return "swap";
    case RewriteOp::Discard: return "discard";
  }
  return "?";
}

struct Rewrite {
  RewriteOp op;
  int target = 0;
  int other = -1;
  Vertex vertex = -1;
  Vertex other_vertex = -1;
  std::vector<Vertex> segment;
  Path path;
  int child = -1;  // Introduce: index of the child step supplying the path
  int slot = 0;    // Introduce: which of the child's result paths
  std::string note;
};

class TraceError : public Error {
 public:
  using Error::Error;
};

namespace detail {

inline std::optional<std::size_t> find_segment(const std::vector<Vertex>& seq,
                                               const std::vector<Vertex>& seg) {
  if (seg.empty() || seg.size() > seq.size()) return std::nullopt;
  for (std::size_t i = 0; i + seg.size() <= seq.size(); ++i)
    if (std::equal(seg.begin(), seg.end(), seq.begin() + static_cast<std::ptrdiff_t>(i)))
      return i;
  return std::nullopt;
}

}  // namespace detail

/// Applies one rewrite to the working list. `child_paths` resolves Introduce
/// steps that draw on a child's result.
inline void apply_rewrite(std::vector<Path>& paths, const Rewrite& r,
                          const std::vector<std::vector<Path>>& child_paths) {
  auto at = [&](int i) -> Path& {
    if (i < 0 || i >= static_cast<int>(paths.size()))
      throw TraceError(std::string(name(r.op)) + ": no working path " + std::to_string(i));
    return paths[static_cast<std::size_t>(i)];
  };
  switch (r.op) {
    case RewriteOp::Introduce:
      if (r.child >= 0) {
        if (r.child >= static_cast<int>(child_paths.size()) ||
            r.slot >= static_cast<int>(child_paths[r.child].size()))
          throw TraceError("introduce: child result unavailable");
        paths.push_back(child_paths[r.child][r.slot]);
      } else {
        paths.push_back(r.path);
      }
      break;
    case RewriteOp::Prepend: {
      auto& vs = at(r.target).vertices();
      vs.insert(vs.begin(), r.vertex);
      break;
    }
    case RewriteOp::Append:
      at(r.target).vertices().push_back(r.vertex);
      break;
    case RewriteOp::TrimFront: {
      auto& vs = at(r.target).vertices();
      if (vs.size() < 2) throw TraceError("trim-front would empty the path");
      vs.erase(vs.begin());
      break;
    }
    case RewriteOp::TrimBack: {
      auto& vs = at(r.target).vertices();
      if (vs.size() < 2) throw TraceError("trim-back would empty the path");
      vs.pop_back();
      break;
    }
    case RewriteOp::Reverse:
      at(r.target) = at(r.target).reversed();
      break;
    case RewriteOp::Splice: {
      auto& vs = at(r.target).vertices();
      std::vector<Vertex> seg = r.segment;
      std::vector<Vertex> rep = r.path.vertices();
      auto pos = detail::find_segment(vs, seg);
      if (!pos) {
        std::reverse(seg.begin(), seg.end());
        std::reverse(rep.begin(), rep.end());
        pos = detail::find_segment(vs, seg);
      }
      if (!pos) throw TraceError("splice: segment not found");
      auto first = vs.begin() + static_cast<std::ptrdiff_t>(*pos);
      vs.erase(first, first + static_cast<std::ptrdiff_t>(seg.size()));
      vs.insert(vs.begin() + static_cast<std::ptrdiff_t>(*pos), rep.begin(), rep.end());
      break;
    }
    case RewriteOp::SplitAtEdge: {
      auto& vs = at(r.target).vertices();
      for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
        if ((vs[i] == r.vertex && vs[i + 1] == r.other_vertex) ||
            (vs[i] == r.other_vertex && vs[i + 1] == r.vertex)) {
          Path tail(std::vector<Vertex>(vs.begin() + static_cast<std::ptrdiff_t>(i + 1), vs.end()));
          vs.erase(vs.begin() + static_cast<std::ptrdiff_t>(i + 1), vs.end());
          paths.push_back(std::move(tail));
          return;
        }
      }
      throw TraceError("split-at-edge: edge not on path");
    }
    case RewriteOp::Join: {
      auto tail = at(r.other).vertices();
      auto& vs = at(r.target).vertices();
      auto from = tail.begin();
      if (!vs.empty() && !tail.empty() && vs.back() == tail.front()) ++from;
      vs.insert(vs.end(), from, tail.end());
      paths.erase(paths.begin() + r.other);
      break;
    }
    case RewriteOp::Swap:
      std::swap(at(r.target), at(r.other));
      break;
    case RewriteOp::Discard:
      at(r.target);
      paths.erase(paths.begin() + r.target);
      break;
  }
}

/// One node of the recursion tree.
struct TraceStep {
  std::string algorithm;  // T5, T8, T10, T1
  int depth = 0;
  std::vector<Vertex> anchors;
  Rational d{0};
  int vertex_count = 0;
  std::string case_label;
  std::string answered_by;
  std::optional<Vertex> x_prime;
  std::optional<Vertex> z;
  std::optional<Vertex> y_prime;
  std::optional<Vertex> y_double_prime;
  VertexSet h1;
  VertexSet h2;
  std::vector<std::pair<Vertex, Vertex>> added_edges;
  std::vector<Vertex> gadget_vertices;
  std::vector<std::string> notes;
  std::vector<Rewrite> rewrites;
  std::vector<Path> result;
  std::string outcome;
  std::vector<TraceStep> children;
};

/// Records rewrites on a step while applying them to its working paths.
class Rewriter {
 public:
  explicit Rewriter(TraceStep& step) : step_(step) {}

  const std::vector<Path>& paths() const { return paths_; }
  const Path& path(int i) const { return paths_.at(static_cast<std::size_t>(i)); }
  int size() const { return static_cast<int>(paths_.size()); }

  int introduce(Path p, std::string note) {
    Rewrite r{RewriteOp::Introduce};
    r.path = std::move(p);
    r.note = std::move(note);
    push(std::move(r));
    return size() - 1;
  }
  int introduce_child(int child, int slot, std::string note) {
    Rewrite r{RewriteOp::Introduce};
    r.child = child;
    r.slot = slot;
    r.note = std::move(note);
    push(std::move(r));
    return size() - 1;
  }
  void prepend(int t, Vertex v, std::string note) { push(vertex_op(RewriteOp::Prepend, t, v, std::move(note))); }
  void append(int t, Vertex v, std::string note) { push(vertex_op(RewriteOp::Append, t, v, std::move(note))); }
  void trim_front(int t, std::string note) { push(target_op(RewriteOp::TrimFront, t, std::move(note))); }
  void trim_back(int t, std::string note) { push(target_op(RewriteOp::TrimBack, t, std::move(note))); }
  void reverse(int t, std::string note = {}) { push(target_op(RewriteOp::Reverse, t, std::move(note))); }
  void discard(int t, std::string note) { push(target_op(RewriteOp::Discard, t, std::move(note))); }
  void splice(int t, std::vector<Vertex> segment, Path replacement, std::string note) {
    Rewrite r = target_op(RewriteOp::Splice, t, std::move(note));
    r.segment = std::move(segment);
    r.path = std::move(replacement);
    push(std::move(r));
  }
  void split_at_edge(int t, Vertex a, Vertex b, std::string note) {
    Rewrite r = vertex_op(RewriteOp::SplitAtEdge, t, a, std::move(note));
    r.other_vertex = b;
    push(std::move(r));
  }
  void join(int t, int other, std::string note) { push(pair_op(RewriteOp::Join, t, other, std::move(note))); }
  void swap(int t, int other, std::string note = {}) { push(pair_op(RewriteOp::Swap, t, other, std::move(note))); }

 private:
  static Rewrite target_op(RewriteOp op, int t, std::string note) {
    Rewrite r{op};
    r.target = t;
    r.note = std::move(note);
    return r;
  }
  static Rewrite vertex_op(RewriteOp op, int t, Vertex v, std::string note) {
    Rewrite r = target_op(op, t, std::move(note));
    r.vertex = v;
    return r;
  }
  static Rewrite pair_op(RewriteOp op, int t, int other, std::string note) {
    Rewrite r = target_op(op, t, std::move(note));
    r.other = other;
    return r;
  }

  void push(Rewrite r) {
    std::vector<std::vector<Path>> child_results;
    for (const auto& c : step_.children) child_results.push_back(c.result);
    apply_rewrite(paths_, r, child_results);
    step_.rewrites.push_back(std::move(r));
  }

  TraceStep& step_;
  std::vector<Path> paths_;
};

/// Re-executes every step's rewrites bottom-up; returns the root's paths.
inline std::vector<Path> replay(const TraceStep& step) {
  std::vector<std::vector<Path>> child_results;
  for (const auto& c : step.children) child_results.push_back(replay(c));
  std::vector<Path> paths;
  for (const auto& r : step.rewrites) apply_rewrite(paths, r, child_results);
  return paths;
}

/// True when replaying reproduces every step's recorded result.
inline bool replay_matches(const TraceStep& step) {
  for (const auto& c : step.children)
    if (!replay_matches(c)) return false;
  return replay(step) == step.result;
}

inline std::size_t step_count(const TraceStep& step) {
  std::size_t n = 1;
  for (const auto& c : step.children) n += step_count(c);
  return n;
}

inline int max_depth(const TraceStep& step) {
  int d = step.depth;
  for (const auto& c : step.children) d = std::max(d, max_depth(c));
  return d;
}

namespace detail {

inline std::string describe(const Rewrite& r) {
  std::ostringstream os;
  os << name(r.op);
  switch (r.op) {
    case RewriteOp::Introduce:
      if (r.child >= 0)
        os << " child#" << r.child << "[" << r.slot << "]";
      else
        os << " [" << r.path.str() << "]";
      break;
    case RewriteOp::Prepend:
    case RewriteOp::Append:
      os << " #" << r.target << " " << r.vertex;
      break;
    case RewriteOp::Splice:
      os << " #" << r.target << " [" << Path(r.segment).str() << "] -> [" << r.path.str() << "]";
      break;
    case RewriteOp::SplitAtEdge:
      os << " #" << r.target << " " << r.vertex << "-" << r.other_vertex;
      break;
    case RewriteOp::Join:
    case RewriteOp::Swap:
      os << " #" << r.target << " #" << r.other;
      break;
    default:
      os << " #" << r.target;
  }
  if (!r.note.empty()) os << "  (" << r.note << ")";
  return os.str();
}

inline void write_text(std::ostream& os, const TraceStep& s, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  os << pad << s.algorithm << " n=" << s.vertex_count << " anchors=[" << Path(s.anchors).str()
     << "] d=" << to_string(s.d) << " : " << s.case_label;
  if (!s.answered_by.empty()) os << " <" << s.answered_by << ">";
  os << '\n';
  auto opt = [&](const char* label, const std::optional<Vertex>& v) {
    if (v) os << pad << "  " << label << " = " << *v << '\n';
  };
  opt("x'", s.x_prime);
  opt("z", s.z);
  opt("y'", s.y_prime);
  opt("y''", s.y_double_prime);
  if (!s.h1.empty()) os << pad << "  H1 = {" << Path(s.h1).str() << "}\n";
  if (!s.h2.empty()) os << pad << "  H2 = {" << Path(s.h2).str() << "}\n";
  for (auto [u, v] : s.added_edges) os << pad << "  added edge " << u << "-" << v << " (weight 0)\n";
  for (Vertex g : s.gadget_vertices) os << pad << "  gadget vertex " << g << '\n';
  for (const auto& n : s.notes) os << pad << "  note: " << n << '\n';
  for (const auto& c : s.children) write_text(os, c, indent + 1);
  for (const auto& r : s.rewrites) os << pad << "  " << describe(r) << '\n';
  os << pad << "  => " << s.outcome;
  for (const auto& p : s.result) os << " [" << p.str() << "]";
  os << '\n';
}

}  // namespace detail

/// Indented human-readable rendering of the recursion tree.
inline std::string format_trace(const TraceStep& step) {
  std::ostringstream os;
  detail::write_text(os, step, 0);
  return os.str();
}

inline nlohmann::json path_json(const Path& p) { return p.vertices(); }

inline nlohmann::json trace_json(const TraceStep& s) {
  nlohmann::json j;
  j["algorithm"] = s.algorithm;
  j["depth"] = s.depth;
  j["anchors"] = s.anchors;
  j["d"] = to_string(s.d);
  j["vertex_count"] = s.vertex_count;
  j["case"] = s.case_label;
  if (!s.answered_by.empty()) j["answered_by"] = s.answered_by;
  auto opt = [&](const char* key, const std::optional<Vertex>& v) {
    if (v) j[key] = *v;
  };
  opt("x_prime", s.x_prime);
  opt("z", s.z);
  opt("y_prime", s.y_prime);
  opt("y_double_prime", s.y_double_prime);
  if (!s.h1.empty()) j["H1"] = s.h1;
  if (!s.h2.empty()) j["H2"] = s.h2;
  if (!s.added_edges.empty()) {
    auto& arr = j["added_edges"] = nlohmann::json::array();
    for (auto [u, v] : s.added_edges) arr.push_back({u, v});
  }
  if (!s.gadget_vertices.empty()) j["gadget_vertices"] = s.gadget_vertices;
  if (!s.notes.empty()) j["notes"] = s.notes;
  auto& rw = j["rewrites"] = nlohmann::json::array();
  for (const auto& r : s.rewrites) rw.push_back(detail::describe(r));
  auto& res = j["result"] = nlohmann::json::array();
  for (const auto& p : s.result) res.push_back(path_json(p));
  j["outcome"] = s.outcome;
  if (!s.children.empty()) {
    auto& ch = j["children"] = nlohmann::json::array();
    for (const auto& c : s.children) ch.push_back(trace_json(c));
  }
  return j;
}

}  // namespace heavypath
