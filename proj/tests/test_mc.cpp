#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hitset/eengine.hpp"
#include "hitset/mc.hpp"
#include "oracle.hpp"

using namespace hitset;

namespace {

const Hypergraph& h2() {
  static const Hypergraph h(6, {{1, 2, 5}, {3, 4}, {4, 5, 6}, {1, 3, 5}, {2, 6}});
  return h;
}

}  // namespace

TEST_CASE("critical edges") {
  auto s = vertex_set(6, {1, 4});
  CHECK(crit(0, s, h2()) == std::vector<std::size_t>{0, 3});
  CHECK(crit(3, s, h2()) == std::vector<std::size_t>{1, 2});
  CHECK_THROWS(crit(1, s, h2()));
}

TEST_CASE("MinNotMC of the 6-vertex example") {
  auto m = min_not_mc(h2(), 1);
  SetFamily expected(6, {{1, 2, 3}, {1, 5}, {1, 2, 6}, {2, 5, 6}, {1, 3, 4}, {3, 4, 5}, {3, 4, 6}, {2, 4, 6}});
  CHECK(m.size() == 8);
  CHECK(same_sets(m.family, expected));
  CHECK(m.matrix.height() == 8);
}

TEST_CASE("MC-dud-test and MinNotMC agree with brute force") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t w = 2 + rng() % 11, h = 1 + rng() % 6;
    auto hg = oracle::random_full(rng, w, h, 1, 5);
    auto edges = oracle::edge_masks(hg);
    auto m = min_not_mc(hg, 1 + trial % 3);
    CHECK(oracle::family_masks(m.family) == oracle::min_not_mc(w, edges));
    auto members = oracle::family_masks(m.family);
    for (oracle::Mask z = 0; z < (oracle::Mask{1} << w); ++z) {
      bool mc = mc_dud_test(oracle::to_set(w, z), hg);
      REQUIRE(mc == oracle::is_mc(z, edges));
      bool contains = false;
      for (auto y : members)
        if ((y & z) == y) contains = true;
      REQUIRE(mc == !contains);
    }
  }
}

TEST_CASE("min_not_mc does not depend on the worker count") {
  std::mt19937_64 rng(47);
  auto hg = oracle::random_full(rng, 14, 7, 2, 5);
  CHECK(min_not_mc(hg, 1).family == min_not_mc(hg, 4).family);
}

TEST_CASE("minimal transversals of arbitrary edge lists") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t w = 2 + rng() % 10, h = 1 + rng() % 5;
    std::vector<VertexSet> edges;
    std::vector<oracle::Mask> masks;
    for (std::size_t i = 0; i < h; ++i) {
      oracle::Mask e = static_cast<oracle::Mask>(rng()) & ((1U << w) - 1);
      if (!e) e = 1;
      edges.push_back(oracle::to_set(w, e));
      masks.push_back(e);
    }
    auto got = minimal_transversals(w, edges);
    CHECK(oracle::family_masks(got) == oracle::minimal_hitting_sets(w, masks));
  }
  CHECK(minimal_transversals(4, {}).size() == 1);
}

TEST_CASE("aux edges") {
  auto aux = aux_edges(h2(), 1);
  CHECK_FALSE(aux.has_empty);
  CHECK(aux.edges == std::vector<VertexSet>{vertex_set(6, {1, 5}), vertex_set(6, {6})});
  Hypergraph single(3, {{1}, {2, 3}});
  CHECK(aux_edges(single, 0).has_empty);
}

TEST_CASE("killers and very-goodness agree with promise scanning") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 120; ++trial) {
    std::size_t w = 3 + rng() % 10, h = 2 + rng() % 6;
    auto hg = oracle::random_full(rng, w, h, 2, 5);
    auto edges = oracle::edge_masks(hg);
    auto m = min_not_mc(hg, 1);
    for (const auto& row : enumerate_hs(hg).rows) {
      auto promise = oracle::family_masks(row_min_members(row));
      std::vector<oracle::Mask> expected;
      for (auto y : oracle::family_masks(m.family))
        for (auto z : promise)
          if ((y & z) == y) {
            expected.push_back(y);
            break;
          }
      CHECK(oracle::family_masks(killers(row, m)) == expected);
      bool all_minimal = true;
      for (auto z : promise) all_minimal = all_minimal && oracle::minimal_hitting(z, edges);
      CHECK(is_very_good(row, m) == all_minimal);
    }
  }
}

TEST_CASE("min_not_mc requires a full hypergraph") {
  CHECK_THROWS_AS(min_not_mc(Hypergraph(3, {{1, 2}})), std::invalid_argument);
}
