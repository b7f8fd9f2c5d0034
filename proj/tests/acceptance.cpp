// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Brute-force references come from oracle.hpp.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "hitset/badness.hpp"
#include "hitset/driver.hpp"
#include "hitset/eengine.hpp"
#include "hitset/exact.hpp"
#include "hitset/mc.hpp"
#include "hitset/noncover.hpp"
#include "hitset/spoiler.hpp"
#include "oracle.hpp"

using namespace hitset;

namespace {

// Pinned limits.
constexpr double kCompressionSeconds = 1.0;
constexpr double kCrossTestSeconds = 600.0;
constexpr double kScaleSeconds = 600.0;
constexpr double kStandardErrors = 3.0;
constexpr std::size_t kEstimationTrials = 100;
constexpr std::size_t kEstimationMinInside = 95;
constexpr double kPercentSlack = 1.0;
constexpr double kScaleRelativeGap = 0.10;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "failed: ";
      else detail << "; ";
      detail << what;
      pass = false;
    }
  }
};

const Hypergraph& h1() {
  static const Hypergraph h(9, {{2, 3, 4, 6}, {1, 2, 3, 4, 5, 7}, {2, 8, 9}});
  return h;
}

const Hypergraph& h2() {
  static const Hypergraph h(6, {{1, 2, 5}, {3, 4}, {4, 5, 6}, {1, 3, 5}, {2, 6}});
  return h;
}

double seconds(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void criterion1(Outcome& o) {
  auto run = enumerate_ehs(h1());
  o.require(run.final_rows.size() == 3, "expected 3 rows");
  std::vector<Count> sizes;
  for (const auto& r : run.final_rows) {
    sizes.push_back(row_cardinality(r));
    o.require(r.kind() == RowKind::G && r.twos().none(), "rows must be 01g-rows");
  }
  std::sort(sizes.begin(), sizes.end());
  o.require(sizes == std::vector<Count>{1, 4, 6}, "cardinalities must be {6,4,1}");
  o.require(run.total_count == 11, "total must be 11");
  auto got = oracle::rows_masks(run.final_rows);
  o.require(!oracle::has_duplicates(got), "rows must be disjoint");
  o.require(got == oracle::exact_hitting_sets(9, oracle::edge_masks(h1())), "union must equal brute-force EHS");
  o.detail << (o.pass ? "3 rows, cardinalities {6,4,1}, total 11" : "");
}

void criterion2(Outcome& o) {
  std::vector<VertexSet> edges;
  for (std::size_t i = 0; i < 20; ++i) {
    VertexSet e(200);
    for (std::size_t j = 0; j < 10; ++j) e.set(10 * i + j);
    edges.push_back(e);
  }
  auto t0 = std::chrono::steady_clock::now();
  auto run = enumerate_ehs(Hypergraph(200, edges));
  double t = seconds(t0);
  Count expected = 1;
  for (int i = 0; i < 20; ++i) expected *= 10;
  o.require(run.final_rows.size() == 1, "expected one row");
  o.require(run.total_count == expected, "count must be 10^20");
  o.require(t < kCompressionSeconds, "runtime must be below 1 s");
  o.detail << (o.pass ? "1 row, count " + run.total_count.str() + ", " + std::to_string(t) + " s" : "");
}

void criterion3(Outcome& o) {
  auto s = enumerate_hs(h2());
  auto edges = oracle::edge_masks(h2());
  auto got = oracle::rows_masks(s.rows);
  o.require(!oracle::has_duplicates(got), "semifinal rows must be disjoint");
  o.require(got == oracle::hitting_sets(6, edges), "semifinal union must equal brute-force HS");
  auto res = minhit(h2(), DriverConfig{});
  SetFamily expected(6, {{1, 2, 4}, {1, 4, 6}, {2, 3, 4}, {2, 3, 5}, {2, 4, 5}, {3, 5, 6}, {4, 5, 6}, {1, 3, 6}, {2, 3, 6}});
  auto mhs = oracle::rows_masks(res.final_rows);
  o.require(res.exact_count && *res.exact_count == 9, "|MHS| must be 9");
  o.require(mhs == oracle::family_masks(expected), "MHS must equal the listed sets");
  o.require(mhs == oracle::minimal_hitting_sets(6, edges), "MHS must equal brute force");
  o.detail << (o.pass ? std::to_string(s.size()) + " semifinal rows, |MHS| = 9" : "");
}

void criterion4(Outcome& o) {
  auto m = min_not_mc(h2(), 1);
  SetFamily expected(6, {{1, 2, 3}, {1, 5}, {1, 2, 6}, {2, 5, 6}, {1, 3, 4}, {3, 4, 5}, {3, 4, 6}, {2, 4, 6}});
  o.require(m.size() == 8 && same_sets(m.family, expected), "MinNotMC must equal the 8 listed sets");
  std::mt19937_64 rng(2024);
  std::size_t disagreements = 0;
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t w = 2 + rng() % 11, h = 1 + rng() % 6;
    auto hg = oracle::random_full(rng, w, h, 1, 5);
    auto members = oracle::family_masks(min_not_mc(hg, 1).family);
    for (oracle::Mask z = 0; z < (oracle::Mask{1} << w); ++z) {
      bool contains = false;
      for (auto y : members)
        if ((y & z) == y) contains = true;
      if (mc_dud_test(oracle::to_set(w, z), hg) == contains) ++disagreements;
    }
  }
  o.require(disagreements == 0, std::to_string(disagreements) + " disagreements");
  o.detail << (o.pass ? "8 sets; 100 random hypergraphs, 0 disagreements" : "");
}

void criterion5(Outcome& o) {
  auto nc = enumerate_nc(min_not_mc(h2(), 1).family);
  auto pooled = pooled_max_members(nc);
  SetFamily expected(6, {{2, 3, 4}, {2, 3, 5}, {2, 4, 5}, {2, 3, 6}, {3, 5, 6}, {4, 5, 6}, {2, 6}, {1, 3, 6},
                         {1, 4, 6}, {1, 2, 4}});
  o.require(pooled.size() == 10 && same_sets(pooled, expected), "pooled maximal members must be the 10 listed sets");
  std::size_t failing = 0;
  bool is_26 = false;
  for (const auto& s : pooled)
    if (!h2().is_hitting_set(s)) {
      ++failing;
      is_26 = s == vertex_set(6, {2, 6});
    }
  o.require(failing == 1 && is_26, "exactly {2,6} must fail to hit");
  o.detail << (o.pass ? std::to_string(nc.size()) + " n-rows, 10 pooled sets, {2,6} not hitting" : "");
}

void criterion6(Outcome& o) {
  Hypergraph h4(6, {{1, 5, 6}, {3, 4, 5}, {2, 3}, {1, 4, 6}});
  auto edges = oracle::edge_masks(h4);
  auto m = min_not_mc(h4, 1);
  auto r = parse_row("e1 e2 e2 e1 1 e1");
  auto k = killers(r, m);
  auto expected = oracle::family_masks(SetFamily(6, {{1, 2, 5}, {2, 4, 5}, {3, 4, 5}, {2, 5, 6}}));
  std::size_t e2_rows = 0;
  for (auto choice : {BubbleChoice::First, BubbleChoice::Last}) {
    auto rows = expand_merely_good(r, k, choice);
    auto got = oracle::rows_masks(rows);
    o.require(!oracle::has_duplicates(got), "rows must be disjoint");
    o.require(got == expected, "union must be {125,245,345,256}");
    for (const auto& row : rows) {
      o.require(is_very_good(row, m), "rows must be very good");
      for (auto x : oracle::row_masks(row)) o.require(oracle::minimal_hitting(x, edges), "members must be MHS");
    }
    if (choice == BubbleChoice::Last) e2_rows = rows.size();
  }
  o.require(e2_rows == 2, "e2-first order must give 2 rows");
  o.detail << (o.pass ? "both orders give {125,245,345,256}; e2-first gives 2 rows" : "");
}

void criterion7(Outcome& o) {
  auto r = parse_row("e1 e1 0 e2 e2 e2 2 e3 e3 e3 e3 1 1");
  Hypergraph h(13, {{12}, {13}, {12, 13}, {5, 6, 7, 8, 9}});
  auto p = potential_spoiler_rows(r);
  std::vector<Count> sizes;
  for (const auto& d : p.rows) sizes.push_back(row_cardinality(d));
  o.require(sizes == std::vector<Count>{24, 24, 12, 8, 6}, "row cardinalities must be (24,24,12,8,6)");
  o.require(p.pot == 74, "Pot must be 74");
  o.require(n_term(p.rows, h.edge(2)) == 0, "N(3) must be 0");
  o.require(n_term(p.rows, h.edge(3)) == 16, "N(4) must be 16");
  auto v = spoiler_count(r, h);
  Count level1 = v.level_sums.size() >= 2 ? v.level_sums[0] - v.level_sums[1] : Count(0);
  o.require(v.level == 1 && level1 >= 10 && v.lower >= level1, "level-1 bound must be at least 10");
  o.require(v.decision == SpoilerDecision::NotVeryGood, "verdict must be not very good");
  o.detail << (o.pass ? "Pot 74, N(3) = 0, N(4) = 16, level-1 bound " + level1.str() : "");
}

void criterion8(Outcome& o) {
  const std::size_t w = 40;
  auto ones = vertex_set(w, {17, 19, 24});
  std::vector<VertexSet> bubbles{vertex_set(w, {6, 28}), vertex_set(w, {8, 32}), vertex_set(w, {16, 33}),
                                 vertex_set(w, {27, 29, 39})};
  VertexSet zeros = VertexSet::full(w) - ones;
  for (const auto& b : bubbles) zeros -= b;
  WildcardRow r(w, RowKind::E, zeros, ones, VertexSet(w), bubbles);
  SetFamily k(w, {{8, 17, 24}, {8, 19, 24}, {6, 19, 32}, {19, 28, 32}});
  auto second = badness_second(r, k);
  std::vector<std::size_t> removed;
  std::size_t covered = 0;
  for (auto c : second.removed_counts)
    if (c) {
      removed.push_back(c);
      covered += c;
    }
  o.require(second.is_bad, "second test must declare the row bad");
  o.require(removed == std::vector<std::size_t>{12, 6, 6} && covered == 24, "victims must be 12,6,6 covering 24");
  o.require(badness_third(r, k).is_bad, "third test must declare the row bad");
  o.require(!has_superkiller(r, k), "row must not be superkilled");
  o.detail << (o.pass ? "bad by second (12+6+6 = 24) and third test; not superkilled" : "");
}

Hypergraph random_signature(std::mt19937_64& rng, std::size_t max_w, std::size_t max_h) {
  for (;;) {
    Signature sig;
    sig.w = 4 + rng() % (max_w - 3);
    sig.h = 2 + rng() % (max_h - 1);
    sig.k = 2 + rng() % 4;
    sig.seed = rng();
    try {
      return random_hypergraph(sig);
    } catch (const std::invalid_argument&) {
    }
  }
}

void criterion9(Outcome& o) {
  auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(9);
  std::size_t rows = 0, disagreements = 0;
  for (int trial = 0; trial < 200; ++trial) {
    auto hg = random_signature(rng, 14, 8);
    auto w = hg.width();
    auto edges = oracle::edge_masks(hg);
    auto m = min_not_mc(hg, 1);
    auto s = enumerate_hs(hg);
    for (const auto& row : s.rows) {
      ++rows;
      std::size_t good = 0, total = 0;
      for (const auto& z : row_min_members(row)) {
        ++total;
        good += oracle::minimal_hitting(oracle::to_mask(z), edges);
      }
      bool bad = good == 0;
      auto k = killers(row, m);
      bool b1 = badness_first(row, hg).is_bad, b2 = badness_second(row, k).is_bad, b3 = badness_third(row, k).is_bad;
      if (b1 != bad || b2 != bad || b3 != bad) ++disagreements;
      if (is_very_good(row, m) != (good == total)) ++disagreements;
    }
    DriverConfig c;
    c.seed = static_cast<std::uint64_t>(trial);
    auto res = minhit(hg, c);
    if (oracle::rows_masks(res.final_rows) != oracle::minimal_hitting_sets(w, edges)) ++disagreements;
  }
  double t = seconds(t0);
  o.require(disagreements == 0, std::to_string(disagreements) + " disagreements");
  o.require(t < kCrossTestSeconds, "runtime must be below 10 min");
  o.detail << (o.pass ? "200 hypergraphs, " + std::to_string(rows) + " rows, 0 disagreements, " + std::to_string(t) + " s"
                      : "");
}

void criterion10(Outcome& o) {
  std::mt19937_64 rng(10);
  std::size_t disagreements = 0, empty = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    std::size_t w = 1 + rng() % 14;
    auto e = oracle::random_row(rng, w, RowKind::E);
    auto n = oracle::random_row(rng, w, RowKind::N);
    bool truth = true;
    for (oracle::Mask x = 0; x < (oracle::Mask{1} << w) && truth; ++x)
      if (oracle::row_has(e, x) && oracle::row_has(n, x)) truth = false;
    empty += truth;
    if (e_intersect_n_empty(e, n) != truth) ++disagreements;
  }
  o.require(disagreements == 0, std::to_string(disagreements) + " disagreements");
  o.detail << (o.pass ? "10000 pairs (" + std::to_string(empty) + " empty), 0 disagreements" : "");
}

void criterion11(Outcome& o) {
  // Instances with at least one merely-good row, where first grade completes.
  struct Instance {
    Hypergraph h;
    Count exact;
    double variance_times_n = 0;  // sum over merely-good rows of |min|^2 p (1 - p)
  };
  std::vector<Instance> instances;
  for (std::uint64_t seed = 1; instances.size() < 10 && seed < 1000; ++seed) {
    auto h = random_hypergraph({14, 7, 4, seed});
    DriverConfig c;
    auto res = minhit(h, c);
    auto m = min_not_mc(h, 1);
    double var = 0;
    for (const auto& row : res.semifinal.rows) {
      if (is_very_good(row, m)) continue;
      auto first = badness_first(row, h);
      double total = promise_size(row).convert_to<double>();
      double p = static_cast<double>(first.survivors->size()) / total;
      var += total * total * p * (1 - p);
    }
    if (var > 0) instances.push_back({h, *res.exact_count, var});
  }
  o.require(instances.size() == 10, "could not find 10 instances with merely-good rows");
  std::size_t inside = 0;
  const std::size_t n = 20;
  for (std::size_t i = 0; i < kEstimationTrials && !instances.empty(); ++i) {
    const auto& inst = instances[i % instances.size()];
    DriverConfig c;
    c.grade = Grade::Second;
    c.samples = n;
    c.seed = 1000 + i;
    auto res = minhit(inst.h, c);
    double se = std::sqrt(inst.variance_times_n / static_cast<double>(n));
    double gap = std::abs(res.estimate.total - inst.exact.convert_to<double>());
    if (gap <= kStandardErrors * se + 1e-9) ++inside;
  }
  o.require(inside >= kEstimationMinInside, std::to_string(inside) + "/100 within 3 SE");
  o.detail << (o.pass ? std::to_string(inside) + "/100 trials within 3 SE" : "");
}

void criterion12(Outcome& o) {
  auto t0 = std::chrono::steady_clock::now();
  auto h = random_hypergraph({50, 20, 5, 12});
  DriverConfig second;
  second.grade = Grade::Second;
  second.workers = 0;
  auto mnmc = min_not_mc(h, 0);
  auto est = minhit(h, second, &mnmc);
  auto s = est.stats.shares;
  double sum = s.very_good + s.merely_good + s.bad + s.unresolved;
  o.require(std::abs(sum - 100.0) <= kPercentSlack, "percentages must sum to 100");

  DriverConfig first;
  first.workers = 0;
  auto exact = minhit(h, first, &mnmc);
  double x = exact.exact_count->convert_to<double>();
  double gap = std::abs(est.estimate.total - x) / x;
  double t = seconds(t0);
  o.require(gap < kScaleRelativeGap, "estimate differs by " + std::to_string(100 * gap) + "%");
  o.require(t < kScaleSeconds, "runtime must be below 10 min");
  std::ostringstream d;
  d << est.stats.rows << " rows; vg " << s.very_good << "%, mg " << s.merely_good << "%, bad " << s.bad
    << "%; exact " << x << ", estimate " << est.estimate.total << " (" << 100 * gap << "%), " << t << " s";
  o.detail << (o.pass ? d.str() : "");
}

}  // namespace

int main() {
  const std::vector<std::function<void(Outcome&)>> criteria{criterion1, criterion2, criterion3,  criterion4,
                                                            criterion5, criterion6, criterion7,  criterion8,
                                                            criterion9, criterion10, criterion11, criterion12};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i](o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << o.detail.str() << std::endl;
    failures += !o.pass;
  }
  return failures == 0 ? 0 : 1;
}
