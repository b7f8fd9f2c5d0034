#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hitset/exact.hpp"
#include "oracle.hpp"

using namespace hitset;

TEST_CASE("imposing an exactly-one constraint on a four-bubble row") {
  auto row = parse_row("g1 g1 g2 g2 g3 g4 g1 g1 g2 g3 g3 g4");
  auto sons = impose_exact(row, vertex_set(12, {1, 2, 3, 4, 5, 6}));
  REQUIRE(sons.size() == 4);
  CHECK(sons[0] == parse_row("g1 g1 0 0 0 0 0 0 1 g2 g2 1"));
  CHECK(sons[1] == parse_row("0 0 g1 g1 0 0 g2 g2 0 g3 g3 1"));
  CHECK(sons[2] == parse_row("0 0 0 0 1 0 g1 g1 1 0 0 1"));
  CHECK(sons[3] == parse_row("0 0 0 0 0 1 g1 g1 1 g2 g2 0"));
}

TEST_CASE("impose_exact edge cases") {
  auto row = parse_row("1 1 2 2");
  CHECK(impose_exact(row, vertex_set(4, {1, 2})).empty());
  auto one = impose_exact(row, vertex_set(4, {1, 3}));
  REQUIRE(one.size() == 1);
  CHECK(one[0] == parse_row("1 1 0 2"));
  // Zeroing the rest of K empties a bubble.
  auto dead = impose_exact(parse_row("1 g1 g1 2"), vertex_set(4, {1, 2, 3}));
  CHECK(dead.empty());
}

TEST_CASE("impose_exact sons are disjoint and exact on random rows") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t w = 1 + rng() % 12;
    auto row = oracle::random_row(rng, w, RowKind::G);
    oracle::Mask k = static_cast<oracle::Mask>(rng()) & ((1U << w) - 1);
    if (!k) k = 1;
    auto sons = impose_exact(row, oracle::to_set(w, k));
    std::vector<oracle::Mask> expected;
    for (auto x : oracle::row_masks(row))
      if (std::popcount(x & k) == 1) expected.push_back(x);
    auto got = oracle::rows_masks(sons);
    CHECK_FALSE(oracle::has_duplicates(got));
    CHECK(got == expected);
    for (const auto& s : sons) CHECK(s.kind() == RowKind::G);
  }
}

TEST_CASE("exact hitting sets of the 9-vertex example") {
  Hypergraph h1(9, {{2, 3, 4, 6}, {1, 2, 3, 4, 5, 7}, {2, 8, 9}});
  auto run = enumerate_ehs(h1);
  REQUIRE(run.final_rows.size() == 3);
  CHECK(run.total_count == 11);
  std::vector<WildcardRow> expected{parse_row("g1 0 0 0 g1 1 g1 g2 g2"), parse_row("0 0 g1 g1 0 0 0 g2 g2"),
                                    parse_row("0 1 0 0 0 0 0 0 0")};
  for (const auto& e : expected)
    CHECK(std::find(run.final_rows.begin(), run.final_rows.end(), e) != run.final_rows.end());
  CHECK(oracle::rows_masks(run.final_rows) == oracle::exact_hitting_sets(9, oracle::edge_masks(h1)));
}

TEST_CASE("disjoint edges compress to a single row") {
  std::vector<VertexSet> edges;
  for (std::size_t i = 0; i < 20; ++i) {
    VertexSet e(200);
    for (std::size_t j = 0; j < 10; ++j) e.set(10 * i + j);
    edges.push_back(e);
  }
  auto run = enumerate_ehs(Hypergraph(200, edges));
  CHECK(run.final_rows.size() == 1);
  Count expected = 1;
  for (int i = 0; i < 20; ++i) expected *= 10;
  CHECK(run.total_count == expected);
}

TEST_CASE("enumerate_ehs agrees with brute force with and without the feasibility test") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t w = 3 + rng() % 12, h = 1 + rng() % 7;
    auto hg = oracle::random_full(rng, w, h, 1, 5);
    auto truth = oracle::exact_hitting_sets(w, oracle::edge_masks(hg));
    for (bool feas : {true, false}) {
      ExactOptions o;
      o.feasibility = feas;
      auto run = enumerate_ehs(hg, o);
      auto got = oracle::rows_masks(run.final_rows);
      CHECK_FALSE(oracle::has_duplicates(got));
      CHECK(got == truth);
      CHECK(run.total_count == truth.size());
    }
  }
}

TEST_CASE("ehs_feasible never rejects a row that holds a solution") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t w = 3 + rng() % 10, h = 1 + rng() % 6;
    auto hg = oracle::random_full(rng, w, h, 1, 4);
    auto row = oracle::random_row(rng, w, RowKind::G);
    auto truth = oracle::exact_hitting_sets(w, oracle::edge_masks(hg));
    bool has = false;
    for (auto x : truth)
      if (oracle::row_has(row, x)) has = true;
    auto f = ehs_feasible(row, hg, 0);
    if (has) CHECK(f != Feasibility::Infeasible);
    if (!has) CHECK(f != Feasibility::Feasible);
  }
}

TEST_CASE("enumerate_ehs requires a full hypergraph") {
  CHECK_THROWS_AS(enumerate_ehs(Hypergraph(3, {{1, 2}})), std::invalid_argument);
}

TEST_CASE("perfect matchings through the star hypergraph") {
  // The 4-cycle has two perfect matchings, K4 has three.
  auto c4 = stars_hypergraph(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}});
  CHECK(enumerate_ehs(c4).total_count == 2);
  auto k4 = stars_hypergraph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  CHECK(enumerate_ehs(k4).total_count == 3);
  // The Petersen graph has six.
  auto petersen = stars_hypergraph(10, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {1, 6}, {2, 7}, {3, 8},
                                        {4, 9}, {5, 10}, {6, 8}, {8, 10}, {10, 7}, {7, 9}, {9, 6}});
  CHECK(enumerate_ehs(petersen).total_count == 6);
  CHECK_THROWS(stars_hypergraph(3, {{1, 2}}));
  CHECK_THROWS(stars_hypergraph(2, {{1, 1}}));
}
