#pragma once

// Wildcard rows: symbolic set families over [w] made of fixed 0s, fixed 1s,
// free positions (2s) and disjoint bubbles of a single kind:
//   G  exactly one 1 in the bubble
//   E  at least one 1 in the bubble
//   N  at least one 0 in the bubble

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hitset/bitset.hpp"
#include "hitset/hypergraph.hpp"

namespace hitset {

enum class RowKind { G, E, N };

char kind_letter(RowKind k) noexcept;
RowKind kind_from_letter(char c);

class WildcardRow {
 public:
  WildcardRow() = default;

  // Validates that zeros, ones, twos and the bubbles partition [width] and
  // normalizes: size-1 G/E bubbles become fixed 1s, size-1 N bubbles fixed 0s,
  // bubbles are sorted by their minimum element. Throws std::invalid_argument.
  WildcardRow(std::size_t width, RowKind kind, VertexSet zeros, VertexSet ones, VertexSet twos,
              std::vector<VertexSet> bubbles);

  static WildcardRow all_twos(std::size_t width, RowKind kind);

  std::size_t width() const noexcept { return width_; }
  RowKind kind() const noexcept { return kind_; }
  const VertexSet& zeros() const noexcept { return zeros_; }
  const VertexSet& ones() const noexcept { return ones_; }
  const VertexSet& twos() const noexcept { return twos_; }
  const std::vector<VertexSet>& bubbles() const noexcept { return bubbles_; }
  std::size_t bubble_count() const noexcept { return bubbles_.size(); }

  // Positions covered by bubbles.
  VertexSet bubble_union() const;

  friend bool operator==(const WildcardRow&, const WildcardRow&) = default;

  // Mutable access for the imposition routines; call normalize() afterwards.
  struct Parts {
    std::size_t width;
    RowKind kind;
    VertexSet zeros, ones, twos;
    std::vector<VertexSet> bubbles;
  };
  Parts parts() const { return Parts{width_, kind_, zeros_, ones_, twos_, bubbles_}; }
  // Normalizes without re-checking the partition. Returns nullopt when some
  // bubble became empty, i.e. the described family is empty.
  static std::optional<WildcardRow> from_parts(Parts p);

 private:
  struct Trusted {};
  WildcardRow(Trusted, Parts p);
  void normalize();

  std::size_t width_ = 0;
  RowKind kind_ = RowKind::E;
  VertexSet zeros_, ones_, twos_;
  std::vector<VertexSet> bubbles_;
};

// A row on the working stack, tagged with the first edge not yet imposed.
struct PendingRow {
  WildcardRow row;
  std::size_t next_edge = 0;
};

// Number of sets in the row: 2^|twos| times, per bubble of size s, s (G) or
// 2^s - 1 (E, N).
Count row_cardinality(const WildcardRow& row);

bool row_contains(const WildcardRow& row, const VertexSet& x);

// Product of the bubble sizes: |min(row)| for E rows, |max(row)| for N rows.
Count promise_size(const WildcardRow& row);

// |ones| + number of bubbles, the common size of every row-minimal set of an E row.
std::size_t row_degree(const WildcardRow& row);

// Row-minimal members of an E row: ones plus one element per bubble. Members
// are ordered mixed-radix with the first bubble most significant.
SetFamily row_min_members(const WildcardRow& row);

// Row-maximal members of an N row: ones and twos plus every bubble with one
// position left out.
SetFamily row_max_members(const WildcardRow& row);

// Decodes the index-th row-minimal member (same order as row_min_members).
VertexSet min_member_at(const WildcardRow& row, std::size_t index);

// Mixed-radix digit strides for min-member indices (last bubble stride 1).
std::vector<std::size_t> min_member_strides(const WildcardRow& row);

// E row -> G row with twos zeroed and every e-bubble turned into a g-bubble.
// The result's members are exactly the row-minimal members of the input.
WildcardRow finalize_e_to_g(const WildcardRow& row);

// Visits every member once, lexicographically by bitstring (position 1
// first, 0 before 1). The visitor returns false to stop early.
void for_each_member(const WildcardRow& row, const std::function<bool(const VertexSet&)>& visit);

// Expands the row; throws LimitExceeded when its cardinality exceeds limit.
std::vector<VertexSet> expand_row(const WildcardRow& row, std::size_t limit = 1'000'000);

// Text form: one token per position, `0`, `1`, `2` or kind letter plus
// 1-based bubble index in canonical order, e.g. "2 e1 e2 0 1 e2 0 e1 2 e2 1".
std::string serialize_row(const WildcardRow& row);
// Parses the text form. Rows without bubbles take `kind_hint`.
WildcardRow parse_row(std::string_view text, RowKind kind_hint = RowKind::G);

}  // namespace hitset
