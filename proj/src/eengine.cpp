#include "hitset/eengine.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "hitset/vlayout.hpp"

namespace hitset {

std::vector<WildcardRow> impose_at_least_one(const WildcardRow& row, const VertexSet& k) {
  auto live = k - row.zeros();
  if (live.intersects(row.ones())) return {row};
  for (const auto& b : row.bubbles())
    if (b.is_subset_of(live)) return {row};
  if (live.none()) return {};

  struct Part {
    VertexSet positions;
    std::size_t bubble;
  };
  constexpr std::size_t kTwos = static_cast<std::size_t>(-1);
  std::vector<Part> parts;
  for (std::size_t i = 0; i < row.bubble_count(); ++i) {
    auto inter = row.bubbles()[i] & live;
    if (inter.any()) parts.push_back({std::move(inter), i});
  }
  auto twos_in_k = row.twos() & live;
  if (twos_in_k.any()) parts.push_back({twos_in_k, kTwos});

  std::vector<WildcardRow> sons;
  sons.reserve(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    auto p = row.parts();
    for (std::size_t j = 0; j < i; ++j) {
      // Earlier parts hold no 1; only bubble parts precede the twos part.
      p.zeros |= parts[j].positions;
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

std::vector<std::size_t> SemifinalSet::degrees() const {
  std::vector<std::size_t> d;
  d.reserve(rows.size());
  for (const auto& r : rows) d.push_back(row_degree(r));
  return d;
}

std::vector<Count> SemifinalSet::promise_sizes() const {
  std::vector<Count> p;
  p.reserve(rows.size());
  for (const auto& r : rows) p.push_back(promise_size(r));
  return p;
}

Count SemifinalSet::total_cardinality() const {
  Count c = 0;
  for (const auto& r : rows) c += row_cardinality(r);
  return c;
}

SemifinalSet enumerate_hs(const Hypergraph& h, const EngineOptions& options) {
  if (!h.is_full()) throw std::invalid_argument("hitting set enumeration needs a full hypergraph");
  if (options.cutoff && *options.cutoff < 1) throw std::invalid_argument("cutoff must be at least 1");
  BitMatrix edge_matrix(h.width(), h.edges());
  std::optional<std::mt19937_64> rng;
  if (options.shuffle_seed) rng.emplace(*options.shuffle_seed);

  SemifinalSet out;
  out.width = h.width();
  std::vector<PendingRow> stack;
  stack.push_back({WildcardRow::all_twos(h.width(), RowKind::E), 0});
  while (!stack.empty()) {
    auto top = std::move(stack.back());
    stack.pop_back();
    if (top.next_edge == h.edge_count()) {
      out.rows.push_back(std::move(top.row));
      continue;
    }
    auto sons = impose_at_least_one(top.row, h.edge(top.next_edge));
    ++out.stats.impositions;
    auto next = top.next_edge + 1;
    for (auto it = sons.rbegin(); it != sons.rend(); ++it) {
      if (options.cutoff && row_degree(*it) > *options.cutoff) {
        ++out.stats.cutoff_dropped;
        continue;
      }
      if (options.feasibility && !hs_feasible(edge_matrix, it->zeros())) {
        ++out.stats.infeasible_dropped;
        continue;
      }
      stack.push_back({std::move(*it), next});
      if (rng && stack.size() > 1) {
        std::uniform_int_distribution<std::size_t> pick(0, stack.size() - 1);
        std::swap(stack.back(), stack[pick(*rng)]);
      }
    }
  }
  return out;
}

MinimumRows minimum_rows(const SemifinalSet& s) {
  if (s.rows.empty()) throw std::invalid_argument("no semifinal rows");
  MinimumRows m;
  m.mu = static_cast<std::size_t>(-1);
  for (std::size_t i = 0; i < s.rows.size(); ++i) {
    auto d = row_degree(s.rows[i]);
    if (d < m.mu) {
      m.mu = d;
      m.indices.clear();
    }
    if (d == m.mu) m.indices.push_back(i);
  }
  return m;
}

}  // namespace hitset
