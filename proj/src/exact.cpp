#include "hitset/exact.hpp"

#include <algorithm>
#include <stdexcept>

namespace hitset {

namespace {

struct FlagPart {
  VertexSet positions;
  std::size_t bubble;  // index into row.bubbles(), or npos for the twos part
  std::size_t min;
};

constexpr std::size_t kTwosPart = static_cast<std::size_t>(-1);

}  // namespace

std::vector<WildcardRow> impose_exact(const WildcardRow& row, const VertexSet& k) {
  auto fixed_hits = row.ones().intersection_count(k);
  if (fixed_hits >= 2) return {};

  if (fixed_hits == 1) {
    auto p = row.parts();
    p.zeros |= p.twos & k;
    p.twos -= k;
    for (auto& b : p.bubbles) {
      p.zeros |= b & k;
      b -= k;
    }
    auto son = WildcardRow::from_parts(std::move(p));
    if (!son) return {};
    return {std::move(*son)};
  }

  std::vector<FlagPart> parts;
  for (std::size_t i = 0; i < row.bubble_count(); ++i) {
    auto inter = row.bubbles()[i] & k;
    if (inter.any()) {
      auto m = inter.find_first();
      parts.push_back({std::move(inter), i, m});
    }
  }
  auto twos_in_k = row.twos() & k;
  if (twos_in_k.any()) parts.push_back({twos_in_k, kTwosPart, twos_in_k.find_first()});
  std::sort(parts.begin(), parts.end(), [](const FlagPart& a, const FlagPart& b) { return a.min < b.min; });

  std::vector<WildcardRow> sons;
  for (const auto& chosen : parts) {
    auto p = row.parts();
    p.zeros |= twos_in_k;
    p.twos -= k;
    bool dead = false;
    for (const auto& part : parts) {
      if (part.bubble == kTwosPart) continue;
      auto& b = p.bubbles[part.bubble];
      if (&part == &chosen) {
        p.zeros |= b - k;
        b &= k;
      } else {
        p.zeros |= part.positions;
        b -= k;
        if (b.none()) dead = true;
      }
    }
    if (dead) continue;
    if (chosen.bubble == kTwosPart) {
      p.zeros -= twos_in_k;
      p.bubbles.push_back(twos_in_k);
    }
    if (auto son = WildcardRow::from_parts(std::move(p))) sons.push_back(std::move(*son));
  }
  return sons;
}

namespace {

class ExactSearch {
 public:
  ExactSearch(const Hypergraph& h, std::size_t budget) : h_(h), budget_(budget) {}

  Feasibility run(const WildcardRow& row, std::vector<std::size_t> pending) {
    auto r = search(row, pending);
    if (r == Feasibility::Infeasible && exhausted_) return Feasibility::Unknown;
    return r;
  }

  std::size_t nodes() const noexcept { return nodes_; }

 private:
  Feasibility search(const WildcardRow& row, std::vector<std::size_t>& pending) {
    if (pending.empty()) return Feasibility::Feasible;
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return Feasibility::Infeasible;
    }
    std::size_t best = 0;
    std::vector<WildcardRow> best_sons;
    bool first = true;
    for (std::size_t i = 0; i < pending.size(); ++i) {
      auto sons = impose_exact(row, h_.edge(pending[i]));
      if (sons.empty()) return Feasibility::Infeasible;
      if (first || sons.size() < best_sons.size()) {
        best = i;
        best_sons = std::move(sons);
        first = false;
        if (best_sons.size() == 1) break;
      }
    }
    auto edge = pending[best];
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best));
    for (const auto& son : best_sons) {
      auto r = search(son, pending);
      if (r == Feasibility::Feasible) {
        pending.insert(pending.begin() + static_cast<std::ptrdiff_t>(best), edge);
        return r;
      }
      if (exhausted_) break;
    }
    pending.insert(pending.begin() + static_cast<std::ptrdiff_t>(best), edge);
    return Feasibility::Infeasible;
  }

  const Hypergraph& h_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace

Feasibility ehs_feasible(const WildcardRow& row, const Hypergraph& h, std::size_t pending_from,
                         std::size_t node_budget, FeasibilityStats* stats) {
  std::vector<std::size_t> pending;
  for (std::size_t i = pending_from; i < h.edge_count(); ++i) pending.push_back(i);
  ExactSearch search(h, node_budget);
  auto r = search.run(row, std::move(pending));
  if (stats) {
    ++stats->calls;
    stats->nodes += search.nodes();
    if (r == Feasibility::Unknown) ++stats->unknown;
  }
  return r;
}

ExactRun enumerate_ehs(const Hypergraph& h, const ExactOptions& options) {
  if (!h.is_full()) throw std::invalid_argument("exact hitting set enumeration needs a full hypergraph");
  ExactRun run;
  std::vector<PendingRow> stack;
  stack.push_back({WildcardRow::all_twos(h.width(), RowKind::G), 0});
  while (!stack.empty()) {
    auto top = std::move(stack.back());
    stack.pop_back();
    if (top.next_edge == h.edge_count()) {
      run.total_count += row_cardinality(top.row);
      run.final_rows.push_back(std::move(top.row));
      continue;
    }
    auto sons = impose_exact(top.row, h.edge(top.next_edge));
    ++run.impositions;
    auto next = top.next_edge + 1;
    for (auto it = sons.rbegin(); it != sons.rend(); ++it) {
      if (options.feasibility &&
          ehs_feasible(*it, h, next, options.node_budget, &run.feasibility) == Feasibility::Infeasible)
        continue;
      stack.push_back({std::move(*it), next});
    }
  }
  return run;
}

Hypergraph stars_hypergraph(std::size_t vertex_count, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  if (edges.empty()) throw std::invalid_argument("graph has no edges");
  std::vector<VertexSet> stars(vertex_count, VertexSet(edges.size()));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    if (u < 1 || u > vertex_count || v < 1 || v > vertex_count)
      throw std::invalid_argument("graph edge " + std::to_string(i + 1) + " has an endpoint out of range");
    if (u == v) throw std::invalid_argument("graph edge " + std::to_string(i + 1) + " is a loop");
    stars[u - 1].set(i);
    stars[v - 1].set(i);
  }
  for (std::size_t v = 0; v < vertex_count; ++v)
    if (stars[v].none()) throw std::invalid_argument("vertex " + std::to_string(v + 1) + " is isolated");
  return Hypergraph(edges.size(), std::move(stars));
}

}  // namespace hitset
