#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hitset/vlayout.hpp"
#include "oracle.hpp"

using namespace hitset;

TEST_CASE("column queries match row-wise evaluation") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t w = 1 + rng() % 12, rows = rng() % 150;
    SetFamily f(w);
    for (std::size_t i = 0; i < rows; ++i) f.add(oracle::to_set(w, static_cast<oracle::Mask>(rng()) & ((1U << w) - 1)));
    BitMatrix m(f);
    REQUIRE(m.height() == rows);
    auto pos = oracle::to_set(w, static_cast<oracle::Mask>(rng()) & ((1U << w) - 1));
    auto any = m.or_columns(pos), two = m.at_least_two(pos), one = m.exactly_one(pos), inside = m.rows_inside(pos);
    bool all_meet = true;
    for (std::size_t i = 0; i < rows; ++i) {
      auto c = f[i].intersection_count(pos);
      CHECK(m.row(i) == f[i]);
      CHECK(any.test(i) == (c >= 1));
      CHECK(two.test(i) == (c >= 2));
      CHECK(one.test(i) == (c == 1));
      CHECK(inside.test(i) == f[i].is_subset_of(pos));
      if (c == 0) all_meet = false;
    }
    CHECK(covers_all(m, pos) == all_meet);
  }
}

TEST_CASE("minimize_family keeps exactly the inclusion-minimal members") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t w = 1 + rng() % 10, rows = rng() % 60;
    SetFamily f(w);
    for (std::size_t i = 0; i < rows; ++i) f.add(oracle::to_set(w, static_cast<oracle::Mask>(rng()) & ((1U << w) - 1)));
    auto masks = oracle::family_masks(f);
    std::vector<oracle::Mask> expected;
    for (auto x : masks) {
      bool minimal = true;
      for (auto y : masks)
        if (y != x && (y & x) == y) minimal = false;
      if (minimal && (expected.empty() || expected.back() != x)) expected.push_back(x);
    }
    auto got = minimize_family(f);
    CHECK(oracle::family_masks(got) == expected);
    for (std::size_t i = 1; i < got.size(); ++i) CHECK(got[i - 1].count() <= got[i].count());
  }
}

TEST_CASE("equivalence classes of a degenerate hypergraph") {
  Hypergraph h1(9, {{2, 3, 4, 6}, {1, 2, 3, 4, 5, 7}, {2, 8, 9}});
  auto classes = equivalence_classes(h1);
  std::vector<VertexSet> expected{vertex_set(9, {1, 5, 7}), vertex_set(9, {2}), vertex_set(9, {3, 4}),
                                  vertex_set(9, {6}), vertex_set(9, {8, 9})};
  CHECK(classes == expected);
}

TEST_CASE("hs_feasible spots an edge swallowed by zeros") {
  Hypergraph h(6, {{1, 2, 5}, {3, 4}, {4, 5, 6}, {1, 3, 5}, {2, 6}});
  BitMatrix m(h.as_family());
  CHECK(hs_feasible(h, vertex_set(6, {1, 3})));
  CHECK_FALSE(hs_feasible(h, vertex_set(6, {3, 4})));
  CHECK_FALSE(hs_feasible(m, vertex_set(6, {2, 6, 1})));
  CHECK(hs_feasible(m, VertexSet(6)));
}
