#pragma once

// The noncover n-algorithm: NC(S) = { Z : no member of S lies inside Z } as a
// disjoint union of 012n-rows, plus an emptiness test for e-row/n-row pairs.

#include <cstddef>
#include <vector>

#include "hitset/hypergraph.hpp"
#include "hitset/row.hpp"

namespace hitset {

// Sons of an N row under "not all of Y": pairwise disjoint, union equal to
// { x in row : Y not inside x }. Flag parts are ordered by minimum element.
std::vector<WildcardRow> impose_at_least_zero(const WildcardRow& row, const VertexSet& y);

struct NoncoverSet {
  std::vector<WildcardRow> rows;
  SetFamily source;

  std::size_t size() const noexcept { return rows.size(); }
  Count total_cardinality() const;
};

// Members are imposed from the last to the first.
NoncoverSet enumerate_nc(const SetFamily& s);

// Row-maximal members of all rows, in row order.
SetFamily pooled_max_members(const NoncoverSet& nc);

// Inclusion-maximal members, deduplicated.
SetFamily maximize_family(const SetFamily& family);

// True iff no set lies in both the E row and the N row. Decided by
// propagating forced 0s and 1s to a fixpoint.
bool e_intersect_n_empty(const WildcardRow& e_row, const WildcardRow& n_row);

// True iff the E row meets some row of the noncover set.
bool meets_any(const WildcardRow& e_row, const NoncoverSet& nc);

}  // namespace hitset
