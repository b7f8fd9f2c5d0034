#pragma once

// Vertical Layout: a set family stored column-wise, so that cover and
// containment questions become word-parallel OR/AND sweeps over columns.

#include <cstddef>
#include <vector>

#include "hitset/bitset.hpp"
#include "hitset/hypergraph.hpp"

namespace hitset {

class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t width) : width_(width), columns_(width) {}
  explicit BitMatrix(const SetFamily& family);
  BitMatrix(std::size_t width, const std::vector<VertexSet>& rows);

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  const Bitset& column(std::size_t j) const { return columns_[j]; }
  bool at(std::size_t i, std::size_t j) const { return columns_[j].test(i); }
  VertexSet row(std::size_t i) const;

  void append_row(const VertexSet& member);

  // OR of the selected columns, a bitstring over the rows.
  Bitset or_columns(const VertexSet& positions) const;
  // Rows having at least two 1s among the selected columns.
  Bitset at_least_two(const VertexSet& positions) const;
  // Rows having exactly one 1 among the selected columns.
  Bitset exactly_one(const VertexSet& positions) const;
  // Rows whose member lies inside `positions`.
  Bitset rows_inside(const VertexSet& positions) const;

 private:
  std::size_t width_ = 0;
  std::size_t height_ = 0;
  std::vector<Bitset> columns_;
};

// True iff every member of the family meets `positions`.
bool covers_all(const BitMatrix& matrix, const VertexSet& positions);

// Inclusion-minimal members, deduplicated, in cardinality-bucket order
// (first occurrence order within a bucket).
SetFamily minimize_family(const SetFamily& family);

// Vertices grouped by identical edge membership, ordered by smallest vertex.
std::vector<VertexSet> equivalence_classes(const Hypergraph& h);

// True iff no edge lies inside `zero_set`.
bool hs_feasible(const Hypergraph& h, const VertexSet& zero_set);
// Same test against a prebuilt edge matrix.
bool hs_feasible(const BitMatrix& edges, const VertexSet& zero_set);

}  // namespace hitset
