#include "hitset/vlayout.hpp"

#include <map>
#include <unordered_map>
#include <unordered_set>

namespace hitset {

BitMatrix::BitMatrix(const SetFamily& family) : BitMatrix(family.width(), family.members()) {}

BitMatrix::BitMatrix(std::size_t width, const std::vector<VertexSet>& rows) : width_(width), columns_(width) {
  height_ = rows.size();
  for (auto& c : columns_) c.resize(height_);
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i].for_each([&](std::size_t j) { columns_[j].set(i); });
}

VertexSet BitMatrix::row(std::size_t i) const {
  VertexSet r(width_);
  for (std::size_t j = 0; j < width_; ++j)
    if (columns_[j].test(i)) r.set(j);
  return r;
}

void BitMatrix::append_row(const VertexSet& member) {
  for (std::size_t j = 0; j < width_; ++j) columns_[j].push_back(member.test(j));
  ++height_;
}

Bitset BitMatrix::or_columns(const VertexSet& positions) const {
  Bitset acc(height_);
  positions.for_each([&](std::size_t j) { acc |= columns_[j]; });
  return acc;
}

Bitset BitMatrix::at_least_two(const VertexSet& positions) const {
  Bitset ones(height_), twos(height_);
  positions.for_each([&](std::size_t j) {
    twos |= ones & columns_[j];
    ones |= columns_[j];
  });
  return twos;
}

Bitset BitMatrix::exactly_one(const VertexSet& positions) const {
  Bitset ones(height_), twos(height_);
  positions.for_each([&](std::size_t j) {
    twos |= ones & columns_[j];
    ones |= columns_[j];
  });
  return ones - twos;
}

Bitset BitMatrix::rows_inside(const VertexSet& positions) const { return or_columns(positions.complement()).complement(); }

bool covers_all(const BitMatrix& matrix, const VertexSet& positions) { return matrix.or_columns(positions).all(); }

SetFamily minimize_family(const SetFamily& family) {
  std::map<std::size_t, std::vector<const VertexSet*>> buckets;
  for (const auto& m : family) buckets[m.count()].push_back(&m);

  SetFamily out(family.width());
  BitMatrix min_matrix(family.width());
  for (auto& [size, members] : buckets) {
    std::unordered_set<VertexSet, BitsetHash> seen;
    std::vector<const VertexSet*> accepted;
    for (const auto* y : members) {
      if (!seen.insert(*y).second) continue;
      // Y is minimal iff no current minimal member fits inside Y.
      if (min_matrix.or_columns(y->complement()).all()) accepted.push_back(y);
    }
    for (const auto* y : accepted) {
      min_matrix.append_row(*y);
      out.add(*y);
    }
  }
  return out;
}

std::vector<VertexSet> equivalence_classes(const Hypergraph& h) {
  BitMatrix m(h.width(), h.edges());
  std::unordered_map<Bitset, std::size_t, BitsetHash> index;
  std::vector<VertexSet> classes;
  for (std::size_t v = 0; v < h.width(); ++v) {
    const auto& col = m.column(v);
    auto [it, inserted] = index.try_emplace(col, classes.size());
    if (inserted) classes.emplace_back(h.width());
    classes[it->second].set(v);
  }
  return classes;
}

bool hs_feasible(const Hypergraph& h, const VertexSet& zero_set) {
  for (const auto& e : h.edges())
    if (e.is_subset_of(zero_set)) return false;
  return true;
}

bool hs_feasible(const BitMatrix& edges, const VertexSet& zero_set) {
  return edges.or_columns(zero_set.complement()).all();
}

}  // namespace hitset
