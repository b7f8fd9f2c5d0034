#pragma once

// The transversal e-algorithm: all hitting sets of a hypergraph as a
// disjoint union of semifinal 012e-rows.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "hitset/hypergraph.hpp"
#include "hitset/row.hpp"

namespace hitset {

// Sons of an E row under "hit K at least once": pairwise disjoint, union equal
// to { x in row : x & K nonempty }. Flag parts follow bubble order, with the
// part made of free positions last.
std::vector<WildcardRow> impose_at_least_one(const WildcardRow& row, const VertexSet& k);

struct EngineOptions {
  bool feasibility = true;                  // drop sons whose zeros swallow an edge
  std::optional<std::size_t> cutoff;        // drop sons of degree above this
  std::optional<std::uint64_t> shuffle_seed;  // randomize stack order
};

struct EngineStats {
  std::size_t impositions = 0;
  std::size_t infeasible_dropped = 0;
  std::size_t cutoff_dropped = 0;
};

struct SemifinalSet {
  std::size_t width = 0;
  std::vector<WildcardRow> rows;
  EngineStats stats;

  std::size_t size() const noexcept { return rows.size(); }
  std::vector<std::size_t> degrees() const;
  std::vector<Count> promise_sizes() const;
  Count total_cardinality() const;
};

// Requires a full hypergraph; throws std::invalid_argument otherwise, or when
// the cutoff is below 1.
SemifinalSet enumerate_hs(const Hypergraph& h, const EngineOptions& options = {});

struct MinimumRows {
  std::size_t mu = 0;
  std::vector<std::size_t> indices;  // rows of degree mu
};

// Throws std::invalid_argument on an empty set.
MinimumRows minimum_rows(const SemifinalSet& s);

}  // namespace hitset
