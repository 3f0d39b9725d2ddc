#include "heavypath/graph_io.hpp"
#include "heavypath/instances.hpp"

#include <catch_amalgamated.hpp>

using namespace heavypath;

TEST_CASE("parse and format round-trip", "[io]") {
  const auto g = fig1_graph();
  const auto text = format_graph(g, "fig1");
  CHECK(text.rfind("# fig1\n6\n", 0) == 0);
  CHECK(parse_graph(text) == g);

  const auto h = parse_graph("# comment\n\n4\n0 1 1/2\n1 2 0.25\n  # indented comment\n2 3 7\n");
  CHECK(h.vertex_count() == 4);
  CHECK(h.weight(0, 1) == Rational(1, 2));
  CHECK(h.weight(2, 1) == Rational(1, 4));
  CHECK(format_graph(h) == "4\n0 1 1/2\n1 2 1/4\n2 3 7\n");
}

TEST_CASE("parse errors carry line numbers", "[io]") {
  auto line_of = [](const std::string& text) {
    try {
      parse_graph(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("") == 0);
  CHECK(line_of("x\n") == 1);
  CHECK(line_of("3 3\n") == 1);
  CHECK(line_of("3\n0 1\n") == 2);
  CHECK(line_of("3\n0 1 1\n1 0 2\n") == 3);
  CHECK(line_of("3\n0 0 1\n") == 2);
  CHECK(line_of("3\n0 5 1\n") == 2);
  CHECK(line_of("3\n0 1 -1\n") == 2);
  CHECK(line_of("3\n0 1 abc\n") == 2);
  CHECK(line_of("3\n0 1 1 9\n") == 2);
  CHECK(line_of("65\n") == 1);
}

TEST_CASE("shipped samples parse", "[io]") {
  const std::string dir = HEAVYPATH_SAMPLES;
  const auto tri = read_graph_file(dir + "/triangle.g");
  CHECK(tri.vertex_count() == 3);
  CHECK(read_graph_file(dir + "/fig1.g") == fig1_graph());
  CHECK(read_graph_file(dir + "/two_cliques.g") == cliques_sharing_pair({4, 4}));
  CHECK(read_graph_file(dir + "/three_cliques.g") == cliques_sharing_pair({3, 3, 3}));
  CHECK_THROWS_AS(read_graph_file(dir + "/absent.g"), Error);
}

TEST_CASE("format refuses graphs with id holes", "[io]") {
  const auto g = fig1_graph();
  CHECK_THROWS_AS(format_graph(g.without_vertex(2)), Error);
}
