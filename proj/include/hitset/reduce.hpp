#pragma once

// Reduction of a degenerate hypergraph to its quotient by vertex equivalence
// (same edge membership), and inflation of G rows back to the original
// ground set.

#include <cstddef>
#include <vector>

#include "hitset/hypergraph.hpp"
#include "hitset/row.hpp"

namespace hitset {

struct ClassMap {
  std::size_t width = 0;               // original ground-set size
  std::vector<VertexSet> classes;      // ordered by representative

  std::size_t class_count() const noexcept { return classes.size(); }
  std::size_t representative(std::size_t k) const { return classes[k].find_first(); }
};

struct Reduction {
  Hypergraph reduced;  // over class indices 1..class_count
  ClassMap map;
};

Reduction reduce_hypergraph(const Hypergraph& h);

// Maps G rows over class indices to G rows over the original vertices.
// Throws std::invalid_argument for non-G rows or a width mismatch.
WildcardRow inflate_row(const WildcardRow& row, const ClassMap& map);
std::vector<WildcardRow> inflate_rows(const std::vector<WildcardRow>& rows, const ClassMap& map);

}  // namespace hitset
