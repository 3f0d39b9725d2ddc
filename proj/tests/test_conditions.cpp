#include "heavypath/conditions.hpp"
#include "heavypath/instances.hpp"
#include "support/graphs.hpp"
#include "support/naive_oracle.hpp"

#include <catch_amalgamated.hpp>

using namespace heavypath;
using namespace fig1_ids;

namespace {

// mode for the reference: 0 min, 1 mean, 2 max
int naive_mode(ConditionKind k) {
  if (k == ConditionKind::DiracMin) return 0;
  return is_sum_form(k) ? 1 : 2;
}

ExtendedRational naive_d_star(const WeightedGraph& g, ConditionKind k, const VertexSet& excluded) {
  auto r = naive::d_star(g, tuple_size(k), naive_mode(k), excluded,
                         k == ConditionKind::PairMaxDist2);
  return r ? ExtendedRational(*r) : ExtendedRational::infinity();
}

}  // namespace

TEST_CASE("distance-two pairs of fig1 reach 5", "[conditions]") {
  const auto g = fig1_graph();
  const Vertex xy[] = {x, y};
  const auto r = d_star(g, ConditionKind::PairMaxDist2, xy);
  CHECK(r.d_star == ExtendedRational(Rational(5)));
  REQUIRE(r.witness);
  CHECK((*r.witness == VertexSet{u1, u2} || *r.witness == VertexSet{u1, u3}));
  CHECK(hypothesis_holds(g, ConditionKind::PairMaxDist2, xy, Rational(5)));
  CHECK_FALSE(hypothesis_holds(g, ConditionKind::PairMaxDist2, xy, Rational(5001, 1000)));
}

TEST_CASE("vacuous hypotheses give infinity", "[conditions]") {
  const Vertex xy[] = {0, 1};
  CHECK(d_star(cliques_sharing_pair({4, 4}), ConditionKind::TripleSum, xy).d_star.is_infinite());
  const Vertex xs[] = {0};
  CHECK(d_star(cliques_sharing_pair({3, 3, 3}), ConditionKind::QuadSum, xs).d_star.is_infinite());
  const auto k5 = testgraphs::complete(5, 2);
  for (ConditionKind k : kAllConditionKinds) {
    const auto r = d_star(k5, k, std::span<const Vertex>{});
    if (tuple_size(k) >= 2) {
      CHECK(r.d_star.is_infinite());
      CHECK_FALSE(r.witness.has_value());
    } else {
      CHECK(r.d_star == ExtendedRational(Rational(8)));
    }
  }
}

TEST_CASE("d* under the pair-max condition on fig1", "[conditions]") {
  const Vertex xy[] = {x, y};
  const auto r = d_star(fig1_graph(), ConditionKind::PairMax, xy);
  CHECK(r.d_star == ExtendedRational(Rational(2)));
  CHECK(r.witness == VertexSet{u1, u4});
}

TEST_CASE("d = 0 always satisfies the hypothesis", "[conditions]") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto g = random_two_connected(5 + static_cast<int>(seed % 3), 0, 5, seed);
    for (ConditionKind k : kAllConditionKinds)
      CHECK(hypothesis_holds(g, k, std::span<const Vertex>{}, Rational(0)));
  }
}

TEST_CASE("d* agrees with brute force over subsets", "[conditions]") {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const auto g = random_two_connected(4 + static_cast<int>(seed % 4), 0, 7, 1000 + seed);
    for (const VertexSet& excluded : {VertexSet{}, VertexSet{0}, VertexSet{0, 1}})
      for (ConditionKind k : kAllConditionKinds) {
        const auto r = d_star(g, k, excluded);
        CHECK(r.d_star == naive_d_star(g, k, excluded));
        if (r.witness) {
          CHECK(qualifies(g, k, *r.witness));
          CHECK(aggregate(g, k, *r.witness) == r.d_star.value());
        }
      }
  }
}

TEST_CASE("hypothesis flips exactly at d*", "[conditions]") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto g = random_two_connected(6, 0, 9, 50 + seed);
    const Vertex xy[] = {0, 1};
    for (ConditionKind k : kAllConditionKinds) {
      const auto ds = d_star(g, k, xy).d_star;
      if (ds.is_infinite()) {
        CHECK(hypothesis_holds(g, k, xy, total_weight(g) + 1));
        continue;
      }
      CHECK(hypothesis_holds(g, k, xy, ds.value()));
      CHECK_FALSE(hypothesis_holds(g, k, xy, ds.value() + Rational(1, 1000)));
    }
  }
}

TEST_CASE("condition lattice on random graphs", "[conditions]") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto g = random_two_connected(5 + static_cast<int>(seed % 3), 0, 10, 7000 + seed);
    auto ds = [&](ConditionKind k) { return d_star(g, k, std::span<const Vertex>{}).d_star; };
    using K = ConditionKind;
    CHECK(ds(K::DiracMin) <= ds(K::OrePairSum));
    CHECK(ds(K::OrePairSum) <= ds(K::PairMax));
    CHECK(ds(K::PairMax) <= ds(K::TripleMax));
    CHECK(ds(K::OrePairSum) <= ds(K::TripleSum));
    CHECK(ds(K::TripleSum) <= ds(K::TripleMax));
    CHECK(ds(K::TripleMax) <= ds(K::QuadMax));
    CHECK(ds(K::TripleSum) <= ds(K::QuadSum));
  }
}

TEST_CASE("condition names round-trip", "[conditions]") {
  for (ConditionKind k : kAllConditionKinds) CHECK(parse_condition_kind(name(k)) == k);
  CHECK_THROWS_AS(parse_condition_kind("Fan"), Error);
}
