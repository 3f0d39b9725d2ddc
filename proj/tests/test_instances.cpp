#include "heavypath/graph_io.hpp"
#include "heavypath/instances.hpp"
#include "support/naive_oracle.hpp"

#include <catch_amalgamated.hpp>

#include <set>

using namespace heavypath;

namespace {

// Every labeled graph on n vertices, filtered by the reference 2-connectivity test.
std::size_t naive_two_connected_count(int n) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::size_t count = 0;
  for (std::uint32_t s = 0; s < (1u << pairs.size()); ++s) {
    WeightedGraph g(n);
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (s >> i & 1u) g.add_edge(pairs[i].first, pairs[i].second, Rational(1));
    if (naive::two_connected(g)) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("every fixture passes its expected properties", "[instances]") {
  for (const auto& name : fixture_names()) {
    const auto f = make_fixture(name);
    for (const auto& r : check_fixture(f)) {
      INFO(name << ": " << r.description);
      CHECK(r.passed);
    }
  }
  for (auto sizes : {std::vector<int>{3, 3}, {3, 5}, {5, 4}}) {
    const auto f = make_fixture("two-cliques", sizes);
    for (const auto& r : check_fixture(f)) CHECK(r.passed);
  }
  for (auto sizes : {std::vector<int>{3, 4, 3}, {4, 4, 4}}) {
    const auto f = make_fixture("three-cliques", sizes);
    for (const auto& r : check_fixture(f)) CHECK(r.passed);
  }
}

TEST_CASE("fixture values against the reference", "[instances]") {
  const auto g = fig1_graph();
  CHECK(naive::d_star(g, 2, 2, {0, 1}, true) == Rational(5));
  CHECK(*naive::heaviest_xy(g, 0, 1) == Rational(4));
  CHECK_FALSE(naive::hamilton_xy(g, 0, 1));
  CHECK(naive::heaviest_x(g, 0) == Rational(6));

  const auto two = cliques_sharing_pair({4, 4});
  CHECK_FALSE(naive::d_star(two, 3, 1, {0, 1}).has_value());
  CHECK(*naive::heaviest_xy(two, 0, 1) == Rational(0));
  CHECK_FALSE(naive::hamilton_xy(two, 0, 1));
  CHECK(naive::disjoint_pairs(two, 0, 1).spanning);
  CHECK(naive::disjoint_pairs(cliques_sharing_pair({3, 3}), 0, 1).spanning);

  const auto three = cliques_sharing_pair({3, 3, 3});
  CHECK_FALSE(naive::d_star(three, 4, 1, {0}).has_value());
  CHECK(naive::heaviest_x(three, 0) == Rational(0));
  CHECK_FALSE(naive::hamilton_x(three, 0));
}

TEST_CASE("fixture builders reject bad parameters", "[instances]") {
  CHECK_THROWS_AS(make_fixture("two-cliques", {2, 4}), Error);
  CHECK_THROWS_AS(make_fixture("two-cliques", {4}), Error);
  CHECK_THROWS_AS(make_fixture("three-cliques", {3, 3}), Error);
  CHECK_THROWS_AS(make_fixture("fig1", {3}), Error);
  CHECK_THROWS_AS(make_fixture("nope"), Error);
}

TEST_CASE("fig1 edge list", "[instances]") {
  const auto g = fig1_graph();
  CHECK(g.vertex_count() == 6);
  CHECK(g.edge_count() == 9);
  CHECK(g.weight(fig1_ids::u2, fig1_ids::u3) == Rational(2));
  CHECK(total_weight(g) == Rational(10));
}

TEST_CASE("enumeration counts", "[instances]") {
  CHECK(TwoConnectedEnumeration(3, {Rational(1)}).count() == 1);
  CHECK(TwoConnectedEnumeration(3, {Rational(0), Rational(1)}).count() == 8);
  for (int n : {3, 4, 5})
    CHECK(TwoConnectedEnumeration(n, {Rational(1)}).count() == naive_two_connected_count(n));
  CHECK(TwoConnectedEnumeration(4, {Rational(1)}).count() == 10);
  CHECK(TwoConnectedEnumeration(5, {Rational(1)}).count() == 238);
}

TEST_CASE("enumeration is duplicate-free, complete and 2-connected", "[instances]") {
  for (int n : {3, 4, 5}) {
    std::set<std::string> seen;
    std::size_t total = 0;
    TwoConnectedEnumeration(n, {Rational(1), Rational(2)}).for_each([&](const WeightedGraph& g) {
      CHECK(naive::two_connected(g));
      seen.insert(format_graph(g));
      ++total;
      return true;
    });
    CHECK(seen.size() == total);
    // Each shape appears with 2^|E| weightings.
    std::size_t expected = 0;
    TwoConnectedEnumeration(n, {Rational(1)}).for_each([&](const WeightedGraph& g) {
      expected += std::size_t{1} << g.edge_count();
      return true;
    });
    CHECK(total == expected);
  }
}

TEST_CASE("enumeration guards", "[instances]") {
  CHECK_THROWS_AS(TwoConnectedEnumeration(2, {Rational(1)}), Error);
  CHECK_THROWS_AS(TwoConnectedEnumeration(8, {Rational(1)}), Error);
  CHECK_THROWS_AS(TwoConnectedEnumeration(4, {}), Error);
  CHECK_THROWS_AS(TwoConnectedEnumeration(4, {Rational(-1)}), Error);
  CHECK_THROWS_AS(TwoConnectedEnumeration(6, {Rational(1), Rational(2), Rational(3)}), Error);
  std::size_t stopped = 0;
  TwoConnectedEnumeration(5, {Rational(1)}).for_each([&](const WeightedGraph&) {
    return ++stopped < 5;
  });
  CHECK(stopped == 5);
}

TEST_CASE("random draws are seeded, 2-connected and in range", "[instances]") {
  const auto a = random_two_connected(6, 0, 10, 1);
  const auto b = random_two_connected(6, 0, 10, 1);
  CHECK(a.edges() == b.edges());
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int n = 3 + static_cast<int>(seed % 6);
    const auto g = random_two_connected(n, 2, 5, seed);
    CHECK(naive::two_connected(g));
    for (const Edge& e : g.edges()) {
      CHECK(e.weight >= 2);
      CHECK(e.weight <= 5);
      CHECK(e.weight.denominator() == 1);
    }
  }
  const auto t = random_two_connected(3, 0, 3, 77);
  CHECK(t.edge_count() == 3);
  CHECK_THROWS_AS(random_two_connected(2, 0, 1, 1), Error);
  CHECK_THROWS_AS(random_two_connected(5, 3, 1, 1), Error);
}
