#pragma once

// The minhit pipeline: e-engine, MinNotMC, sampling-based row classification,
// badness dispatch, merely-good expansion and estimation.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hitset/badness.hpp"
#include "hitset/eengine.hpp"
#include "hitset/hypergraph.hpp"
#include "hitset/mc.hpp"
#include "hitset/row.hpp"

namespace hitset {

struct SampleResult {
  SetFamily samples;
  std::size_t alpha = 0;  // samples passing the MC-dud-test
};

// n independent uniform members of min(row), one uniform pick per bubble.
SampleResult sample_min(const WildcardRow& row, const Hypergraph& h, std::size_t n, std::uint64_t seed);

enum class RowClass { VeryGood, MerelyGood, Bad, Unresolved };
enum class Likelihood { LikelyGood, LikelyBad, Mixed };

const char* to_string(RowClass c) noexcept;
const char* to_string(Likelihood l) noexcept;

struct RowVerdict {
  std::size_t row_index = 0;
  RowClass row_class = RowClass::Unresolved;
  bool sampled = false;
  std::size_t alpha = 0;
  std::size_t samples = 0;
  Likelihood likely = Likelihood::Mixed;
  Count promise = 0;
  std::size_t degree = 0;
  bool superkilled = false;
  std::optional<BadnessMethod> badness_method;
};

enum class Grade { First, Second };
enum class BubbleChoice { MaxK0, Smallest, First, Last };

struct DriverConfig {
  std::size_t samples = 20;
  std::uint64_t seed = 1;
  BadnessConfig badness;
  Grade grade = Grade::First;
  bool feasibility = true;
  std::optional<std::size_t> cutoff;
  bool use_mnmc = true;
  BubbleChoice bubble_choice = BubbleChoice::MaxK0;
  std::size_t spoiler_max_edges = 20;
  std::size_t workers = 1;  // 0 = one per hardware thread
};

// Verdicts in row order. `mnmc` may be null: very-goodness then falls back to
// spoiler counting and a promise scan, badness to the first test.
std::vector<RowVerdict> classify_rows(const Hypergraph& h, const SemifinalSet& s, const MinNotMCFamily* mnmc,
                                      const DriverConfig& config);

// Replaces a merely-good row by disjoint very-good G rows whose members are
// exactly MHS(row). `row_killers` must be Ki(row).
std::vector<WildcardRow> expand_merely_good(const WildcardRow& row, const SetFamily& row_killers,
                                            BubbleChoice choice = BubbleChoice::MaxK0);

struct Estimate {
  double total = 0;
  Count very_good_exact = 0;
  double merely_good = 0;
  double factor = 1;  // semifinal rows per classified row
};

// Exact |min| for very-good rows, alpha/n * |min| for merely-good rows, zero
// for bad ones; scaled by R / verdicts.size() when only a prefix was classified.
Estimate estimate_total(const std::vector<RowVerdict>& verdicts, const SemifinalSet& s);

struct RowTypeShares {
  double very_good = 0, merely_good = 0, bad = 0, unresolved = 0;  // percent
};
RowTypeShares row_type_shares(const std::vector<RowVerdict>& verdicts);

struct MinhitStats {
  std::size_t rows = 0;
  double average_promise = 0;
  double average_degree = 0;
  std::size_t mu = 0;
  Count minimum_count = 0;  // number of minimum hitting sets
  std::size_t mnmc_size = 0;
  RowTypeShares shares;
  std::size_t superkilled = 0;
  double seconds_semifinal = 0, seconds_mnmc = 0, seconds_classify = 0, seconds_expand = 0;
};

struct MinhitResult {
  Grade grade = Grade::First;
  SemifinalSet semifinal;
  std::vector<RowVerdict> verdicts;
  std::vector<WildcardRow> final_rows;  // first grade only
  std::optional<Count> exact_count;     // first grade only
  Estimate estimate;
  MinhitStats stats;
};

class UnresolvedVerdicts : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Throws UnresolvedVerdicts in first grade when some row cannot be decided.
// A precomputed MinNotMC family may be supplied.
MinhitResult minhit(const Hypergraph& h, const DriverConfig& config, const MinNotMCFamily* mnmc = nullptr);

struct Signature {
  std::size_t w = 0, h = 0, k = 0;
  std::uint64_t seed = 1;
};

// h distinct uniform k-subsets of [w], repaired to be full. Throws
// std::invalid_argument when that is impossible.
Hypergraph random_hypergraph(const Signature& sig);

// n minimal hitting sets drawn uniformly (with replacement): a row is picked
// with weight |min(row)|, then a uniform promise member, kept if it is MC.
SetFamily sample_mhs(const Hypergraph& h, const SemifinalSet& s, std::size_t n, std::uint64_t seed,
                     std::size_t max_attempts = 1'000'000);

}  // namespace hitset
