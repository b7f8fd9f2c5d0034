#pragma once

// MC-condition machinery. A set S is MC when every b in S owns a critical
// edge (S & H == {b}); the MC sets form an ideal whose minimal non-members
// (MinNotMC) decide very-goodness and badness of semifinal rows.
//
// Positions and edge indices in this header are 0-based.

#include <cstddef>
#include <vector>

#include "hitset/hypergraph.hpp"
#include "hitset/row.hpp"
#include "hitset/vlayout.hpp"

namespace hitset {

// Edges critical for b within S. Throws std::invalid_argument if b is not in S.
std::vector<std::size_t> crit(std::size_t b, const VertexSet& s, const Hypergraph& h);

// True iff z is MC. For hitting sets this is exactly minimality.
bool mc_dud_test(const VertexSet& z, const Hypergraph& h);

struct MinNotMCFamily {
  SetFamily family;
  BitMatrix matrix;

  MinNotMCFamily() = default;
  explicit MinNotMCFamily(SetFamily f) : family(std::move(f)), matrix(family) {}
  std::size_t size() const noexcept { return family.size(); }
};

// Edges H - {u} for every edge containing u. Empty remainders are kept out;
// `has_empty` reports whether one occurred.
struct AuxEdges {
  std::vector<VertexSet> edges;
  bool has_empty = false;
};
AuxEdges aux_edges(const Hypergraph& h, std::size_t u);

// Minimal transversals of an arbitrary (possibly non-full) edge list over
// [width], computed with the e-engine plus an MC sieve.
std::vector<VertexSet> minimal_transversals(std::size_t width, const std::vector<VertexSet>& edges);

// workers == 0 picks the hardware concurrency; output does not depend on it.
MinNotMCFamily min_not_mc(const Hypergraph& h, std::size_t workers = 0);

// Members of the family that fit inside some row-minimal member of the row.
std::vector<std::size_t> killer_indices(const WildcardRow& row, const MinNotMCFamily& mnmc);
SetFamily killers(const WildcardRow& row, const MinNotMCFamily& mnmc);

bool is_very_good(const WildcardRow& row, const MinNotMCFamily& mnmc);

}  // namespace hitset
