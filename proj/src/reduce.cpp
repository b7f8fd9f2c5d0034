#include "hitset/reduce.hpp"

#include <stdexcept>

#include "hitset/vlayout.hpp"

namespace hitset {

Reduction reduce_hypergraph(const Hypergraph& h) {
  ClassMap map{h.width(), equivalence_classes(h)};
  std::vector<VertexSet> edges;
  edges.reserve(h.edge_count());
  for (const auto& e : h.edges()) {
    VertexSet r(map.class_count());
    for (std::size_t k = 0; k < map.class_count(); ++k)
      if (e.test(map.representative(k))) r.set(k);
    edges.push_back(std::move(r));
  }
  return Reduction{Hypergraph(map.class_count(), std::move(edges)), std::move(map)};
}

WildcardRow inflate_row(const WildcardRow& row, const ClassMap& map) {
  if (row.kind() != RowKind::G) throw std::invalid_argument("only G rows can be inflated");
  if (row.width() != map.class_count()) throw std::invalid_argument("row width does not match class count");
  auto lift = [&](const VertexSet& s) {
    VertexSet out(map.width);
    s.for_each([&](std::size_t k) { out |= map.classes[k]; });
    return out;
  };
  std::vector<VertexSet> bubbles;
  row.ones().for_each([&](std::size_t k) { bubbles.push_back(map.classes[k]); });
  for (const auto& b : row.bubbles()) bubbles.push_back(lift(b));
  return WildcardRow(map.width, RowKind::G, lift(row.zeros()), VertexSet(map.width), lift(row.twos()),
                     std::move(bubbles));
}

std::vector<WildcardRow> inflate_rows(const std::vector<WildcardRow>& rows, const ClassMap& map) {
  std::vector<WildcardRow> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(inflate_row(r, map));
  return out;
}

}  // namespace hitset
