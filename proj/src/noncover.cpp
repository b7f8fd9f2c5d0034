#include "hitset/noncover.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

#include "hitset/vlayout.hpp"

namespace hitset {

std::vector<WildcardRow> impose_at_least_zero(const WildcardRow& row, const VertexSet& y) {
  if (y.intersects(row.zeros())) return {row};
  auto live = y - row.ones();
  for (const auto& b : row.bubbles())
    if (b.is_subset_of(live)) return {row};
  if (live.none()) return {};

  struct Part {
    VertexSet positions;
    std::size_t bubble;
    std::size_t min;
  };
  constexpr std::size_t kTwos = static_cast<std::size_t>(-1);
  std::vector<Part> parts;
  for (std::size_t i = 0; i < row.bubble_count(); ++i) {
    auto inter = row.bubbles()[i] & live;
    if (inter.any()) {
      auto m = inter.find_first();
      parts.push_back({std::move(inter), i, m});
    }
  }
  auto twos_in_y = row.twos() & live;
  if (twos_in_y.any()) parts.push_back({twos_in_y, kTwos, twos_in_y.find_first()});
  std::sort(parts.begin(), parts.end(), [](const Part& a, const Part& b) { return a.min < b.min; });

  std::vector<WildcardRow> sons;
  sons.reserve(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    auto p = row.parts();
    for (std::size_t j = 0; j < i; ++j) {
      p.ones |= parts[j].positions;
      if (parts[j].bubble == kTwos)
        p.twos -= parts[j].positions;
      else
        p.bubbles[parts[j].bubble] -= parts[j].positions;
    }
    const auto& chosen = parts[i];
    if (chosen.bubble == kTwos) {
      p.twos -= chosen.positions;
      p.bubbles.push_back(chosen.positions);
    } else {
      auto& b = p.bubbles[chosen.bubble];
      p.twos |= b - chosen.positions;
      b = chosen.positions;
    }
    if (auto son = WildcardRow::from_parts(std::move(p))) sons.push_back(std::move(*son));
  }
  return sons;
}

Count NoncoverSet::total_cardinality() const {
  Count c = 0;
  for (const auto& r : rows) c += row_cardinality(r);
  return c;
}

NoncoverSet enumerate_nc(const SetFamily& s) {
  const auto w = s.width();
  NoncoverSet out{{}, s};
  const auto h = s.size();
  std::vector<PendingRow> stack;
  stack.push_back({WildcardRow::all_twos(w, RowKind::N), 0});
  while (!stack.empty()) {
    auto top = std::move(stack.back());
    stack.pop_back();
    if (top.next_edge == h) {
      out.rows.push_back(std::move(top.row));
      continue;
    }
    auto sons = impose_at_least_zero(top.row, s[h - 1 - top.next_edge]);
    auto next = top.next_edge + 1;
    for (auto it = sons.rbegin(); it != sons.rend(); ++it) stack.push_back({std::move(*it), next});
  }
  return out;
}

SetFamily pooled_max_members(const NoncoverSet& nc) {
  SetFamily out(nc.source.width());
  for (const auto& r : nc.rows)
    for (const auto& m : row_max_members(r)) out.add(m);
  return out;
}

SetFamily maximize_family(const SetFamily& family) {
  SetFamily complements(family.width());
  for (const auto& m : family) complements.add(m.complement());
  SetFamily out(family.width());
  for (const auto& c : minimize_family(complements)) out.add(c.complement());
  return out;
}

bool e_intersect_n_empty(const WildcardRow& e_row, const WildcardRow& n_row) {
  if (e_row.kind() != RowKind::E || n_row.kind() != RowKind::N)
    throw std::invalid_argument("e_intersect_n_empty expects an E row and an N row");
  if (e_row.width() != n_row.width()) throw std::invalid_argument("rows differ in width");

  auto ones = e_row.ones() | n_row.ones();
  auto zeros = e_row.zeros() | n_row.zeros();
  if (ones.intersects(zeros)) return true;

  std::vector<char> e_done(e_row.bubble_count(), 0), n_done(n_row.bubble_count(), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < e_row.bubble_count(); ++i) {
      if (e_done[i]) continue;
      const auto& b = e_row.bubbles()[i];
      if (b.intersects(ones)) {
        e_done[i] = 1;
        continue;
      }
      auto open = b - zeros;
      auto n = open.count();
      if (n == 0) return true;
      if (n == 1) {
        ones |= open;
        e_done[i] = 1;
        changed = true;
      }
    }
    for (std::size_t i = 0; i < n_row.bubble_count(); ++i) {
      if (n_done[i]) continue;
      const auto& b = n_row.bubbles()[i];
      if (b.intersects(zeros)) {
        n_done[i] = 1;
        continue;
      }
      auto open = b - ones;
      auto n = open.count();
      if (n == 0) return true;
      if (n == 1) {
        zeros |= open;
        n_done[i] = 1;
        changed = true;
      }
    }
  }
  return false;
}

bool meets_any(const WildcardRow& e_row, const NoncoverSet& nc) {
  return std::any_of(nc.rows.begin(), nc.rows.end(),
                     [&](const WildcardRow& s) { return !e_intersect_n_empty(e_row, s); });
}

}  // namespace hitset
