#pragma once

// Badness of a semifinal E row r: r is bad when no member of min(r) is a
// minimal hitting set. Three tests of increasing sophistication.

#include <cstddef>
#include <optional>
#include <vector>

#include "hitset/hypergraph.hpp"
#include "hitset/row.hpp"

namespace hitset {

enum class BadnessMethod { First, Second, Third };

struct BadnessVerdict {
  bool is_bad = false;
  BadnessMethod method = BadnessMethod::First;
  bool superkilled = false;
  std::optional<SetFamily> survivors;  // exactly MHS(r), in promise order
  // Second test only: per processed killer, its victims and how many of those
  // were still alive.
  std::vector<std::size_t> victim_counts;
  std::vector<std::size_t> removed_counts;
};

// ones(r) is not MC, which makes every promise member a dud.
bool superkilled(const WildcardRow& row, const Hypergraph& h);
// Some killer lies inside ones(r).
bool has_superkiller(const WildcardRow& row, const SetFamily& killers);

inline constexpr std::size_t kDefaultPromiseLimit = 5'000'000;

// Scans min(r) with the MC-dud-test. The vertical variant derives per-vertex
// dud sets from column sums over the promise matrix. Throws LimitExceeded
// when |min(r)| exceeds the limit.
BadnessVerdict badness_first(const WildcardRow& row, const Hypergraph& h, bool vertical = false,
                             std::size_t limit = kDefaultPromiseLimit);

// Removes the victims of each killer from min(r), killers cutting fewer
// bubbles first. Throws LimitExceeded when |min(r)| exceeds the limit.
BadnessVerdict badness_second(const WildcardRow& row, const SetFamily& killers, bool keep_survivors = false,
                              std::size_t limit = kDefaultPromiseLimit);

// r is bad iff it misses every row of NC(killers).
BadnessVerdict badness_third(const WildcardRow& row, const SetFamily& killers);

enum class BadnessMode { Auto, First, Second, Third };

struct BadnessConfig {
  BadnessMode mode = BadnessMode::Auto;
  std::size_t first_max = 500;    // auto: promise sizes up to this use the first test
  std::size_t second_max = 5000;  // auto: then up to this the second test
  std::size_t limit = kDefaultPromiseLimit;
};

// Superkiller check first, then the configured test. `killers` may be null
// when MinNotMC is unavailable; only the first test can run then.
BadnessVerdict badness_check(const WildcardRow& row, const Hypergraph& h, const SetFamily* killers,
                             const BadnessConfig& config = {});

}  // namespace hitset
