#pragma once

// The g-algorithm: exact hitting sets as a disjoint union of 01g-rows.

#include <cstddef>
#include <utility>
#include <vector>

#include "hitset/hypergraph.hpp"
#include "hitset/row.hpp"

namespace hitset {

// Sons of a G row under "hit K exactly once": pairwise disjoint, union equal
// to { x in row : |x & K| = 1 }. Flag parts are ordered by minimum element.
std::vector<WildcardRow> impose_exact(const WildcardRow& row, const VertexSet& k);

enum class Feasibility { Feasible, Infeasible, Unknown };

struct FeasibilityStats {
  std::size_t calls = 0;
  std::size_t nodes = 0;
  std::size_t unknown = 0;
};

// Does the row contain an exact hitting set of the edges pending_from..h-1?
// Backtracks over the edge with the fewest sons first; gives up with Unknown
// after node_budget search nodes.
Feasibility ehs_feasible(const WildcardRow& row, const Hypergraph& h, std::size_t pending_from,
                         std::size_t node_budget = 100'000, FeasibilityStats* stats = nullptr);

struct ExactOptions {
  bool feasibility = true;
  std::size_t node_budget = 100'000;
};

struct ExactRun {
  std::vector<WildcardRow> final_rows;
  Count total_count = 0;
  std::size_t impositions = 0;
  FeasibilityStats feasibility;
};

// Requires a full hypergraph; throws std::invalid_argument otherwise.
ExactRun enumerate_ehs(const Hypergraph& h, const ExactOptions& options = {});

// Star hypergraph of a simple graph on vertices 1..vertex_count: one edge per
// vertex holding the (1-based) indices of its incident graph edges. Its exact
// hitting sets are the perfect matchings. Throws on isolated vertices.
Hypergraph stars_hypergraph(std::size_t vertex_count, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

}  // namespace hitset
