#pragma once

// Very-goodness by inclusion-exclusion. A potential spoiler of an E row r is
// Z - {a} for Z in min(r) and a in Z; it is a spoiler when it still hits every
// edge. r is very-good iff it has no spoilers.

#include <cstddef>
#include <optional>
#include <vector>

#include "hitset/hypergraph.hpp"
#include "hitset/row.hpp"

namespace hitset {

struct PotentialSpoilers {
  std::vector<WildcardRow> rows;  // G rows: one per fixed 1, then one per bubble
  Count pot = 0;
};

PotentialSpoilers potential_spoiler_rows(const WildcardRow& row);

// Number of potential spoilers avoiding every position of u.
Count n_term(const std::vector<WildcardRow>& spoiler_rows, const VertexSet& u);

enum class SpoilerDecision { VeryGood, NotVeryGood, Undecided };

struct SpoilerVerdict {
  Count pot = 0;
  std::optional<Count> sp;        // exact count when the full sum was taken
  Count lower = 0;                // valid lower bound on the spoiler count
  std::optional<Count> upper;     // valid upper bound when known
  SpoilerDecision decision = SpoilerDecision::Undecided;
  int level = 0;                  // Bonferroni level that decided, 0 for the full sum
  std::size_t terms_evaluated = 0;
  std::vector<Count> level_sums;  // S_0 = Pot, S_1, S_2, ... as far as evaluated
};

// Bonferroni levels 1 to 3 first, then the full alternating sum when the
// hypergraph has at most `max_full_edges` edges.
SpoilerVerdict spoiler_count(const WildcardRow& row, const Hypergraph& h, std::size_t max_full_edges = 20);

// Certifies goodness: sp below the product of all bubble sizes but the largest.
bool goodness_guarantee(const WildcardRow& row, const Count& sp);

}  // namespace hitset
