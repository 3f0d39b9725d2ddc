#include "heavypath/constructive.hpp"
#include "heavypath/instances.hpp"
#include "heavypath/trace.hpp"

#include <catch_amalgamated.hpp>

using namespace heavypath;

TEST_CASE("rewriter applies and records every operation", "[trace]") {
  TraceStep s;
  Rewriter rw(s);
  const int a = rw.introduce(Path{1, 2, 3}, "start");
  rw.prepend(a, 0, "");
  rw.append(a, 4, "");
  CHECK(rw.path(a) == Path{0, 1, 2, 3, 4});
  rw.splice(a, {3, 2}, Path{3, 7, 2}, "reversed segment");
  CHECK(rw.path(a) == Path{0, 1, 2, 7, 3, 4});
  rw.split_at_edge(a, 7, 2, "");
  REQUIRE(rw.size() == 2);
  CHECK(rw.path(0) == Path{0, 1, 2});
  CHECK(rw.path(1) == Path{7, 3, 4});
  rw.swap(0, 1);
  rw.reverse(0);
  CHECK(rw.path(0) == Path{4, 3, 7});
  rw.trim_front(0, "");
  rw.trim_back(1, "");
  CHECK(rw.path(0) == Path{3, 7});
  CHECK(rw.path(1) == Path{0, 1});
  rw.join(1, 0, "");
  CHECK(rw.size() == 1);
  CHECK(rw.path(0) == Path{0, 1, 3, 7});
  const int b = rw.introduce(Path{9}, "");
  rw.discard(b, "");
  CHECK(rw.size() == 1);

  s.result = rw.paths();
  CHECK(s.rewrites.size() == 12);
  CHECK(replay(s) == s.result);
  CHECK(replay_matches(s));
  s.result[0].vertices().push_back(8);
  CHECK_FALSE(replay_matches(s));
}

TEST_CASE("join drops a shared junction vertex", "[trace]") {
  TraceStep s;
  Rewriter rw(s);
  rw.introduce(Path{0, 1, 2}, "");
  rw.introduce(Path{2, 3}, "");
  rw.join(0, 1, "");
  CHECK(rw.path(0) == Path{0, 1, 2, 3});
}

TEST_CASE("bad rewrites raise TraceError", "[trace]") {
  TraceStep s;
  Rewriter rw(s);
  rw.introduce(Path{5}, "");
  CHECK_THROWS_AS(rw.trim_front(0, ""), TraceError);
  CHECK_THROWS_AS(rw.reverse(3), TraceError);
  CHECK_THROWS_AS(rw.split_at_edge(0, 5, 6, ""), TraceError);
  CHECK_THROWS_AS(rw.splice(0, {1, 2}, Path{1}, ""), TraceError);
  CHECK_THROWS_AS(rw.introduce_child(0, 0, ""), TraceError);
}

TEST_CASE("child results feed the parent replay", "[trace]") {
  TraceStep parent;
  TraceStep child;
  {
    Rewriter rw(child);
    rw.introduce(Path{2, 3}, "");
    child.result = rw.paths();
  }
  child.depth = 1;
  parent.children.push_back(child);
  Rewriter rw(parent);
  const int i = rw.introduce_child(0, 0, "");
  rw.prepend(i, 1, "");
  parent.result = rw.paths();
  CHECK(replay(parent) == std::vector<Path>{Path{1, 2, 3}});
  CHECK(step_count(parent) == 2);
  CHECK(max_depth(parent) == 1);
}

TEST_CASE("construction traces render as text and JSON", "[trace]") {
  const auto g = cliques_sharing_pair({4, 4});
  const auto c = find_paths_t10(g, 0, 1, Rational(1));
  const auto text = format_trace(c.trace);
  CHECK(text.find("T10") != std::string::npos);
  CHECK(text.find("=> SpanningDisjointPair") != std::string::npos);
  const auto j = trace_json(c.trace);
  CHECK(j["algorithm"] == "T10");
  CHECK(j["outcome"] == "SpanningDisjointPair");
  CHECK(j["d"] == "1");
  CHECK(j["result"].size() == 2);
  CHECK(j.contains("children") == !c.trace.children.empty());
}
