#include "hitset/badness.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "hitset/mc.hpp"
#include "hitset/noncover.hpp"
#include "hitset/vlayout.hpp"

namespace hitset {

namespace {

std::size_t bounded_promise(const WildcardRow& row, std::size_t limit) {
  auto p = promise_size(row);
  if (p > limit) throw LimitExceeded("promise of " + p.str() + " members exceeds limit " + std::to_string(limit));
  return static_cast<std::size_t>(p);
}

SetFamily pick(const SetFamily& all, const Bitset& keep) {
  SetFamily out(all.width());
  keep.for_each([&](std::size_t i) { out.add(all[i]); });
  return out;
}

}  // namespace

bool superkilled(const WildcardRow& row, const Hypergraph& h) { return !mc_dud_test(row.ones(), h); }

bool has_superkiller(const WildcardRow& row, const SetFamily& killers) {
  return std::any_of(killers.begin(), killers.end(), [&](const VertexSet& y) { return y.is_subset_of(row.ones()); });
}

BadnessVerdict badness_first(const WildcardRow& row, const Hypergraph& h, bool vertical, std::size_t limit) {
  bounded_promise(row, limit);
  auto promise = row_min_members(row);
  Bitset alive(promise.size());
  if (!vertical) {
    for (std::size_t i = 0; i < promise.size(); ++i) alive.set(i, mc_dud_test(promise[i], h));
  } else {
    BitMatrix m(promise);
    Bitset duds(promise.size());
    for (std::size_t a = 0; a < h.width(); ++a) {
      auto d = m.column(a);
      if (d.none()) continue;
      for (const auto& e : h.edges()) {
        if (!e.test(a)) continue;
        d &= m.at_least_two(e);
        if (d.none()) break;
      }
      duds |= d;
    }
    alive = duds.complement();
  }
  BadnessVerdict v;
  v.method = BadnessMethod::First;
  v.is_bad = alive.none();
  v.survivors = pick(promise, alive);
  return v;
}

BadnessVerdict badness_second(const WildcardRow& row, const SetFamily& killers, bool keep_survivors,
                              std::size_t limit) {
  const auto total = bounded_promise(row, limit);
  const auto& bubbles = row.bubbles();
  const auto strides = min_member_strides(row);
  std::vector<std::vector<std::size_t>> elements;
  for (const auto& b : bubbles) elements.push_back(b.indices());
  auto outside = row.zeros() | row.twos();

  // For each killer: digit fixed per bubble, or npos when the bubble is uncut.
  constexpr std::size_t kFree = static_cast<std::size_t>(-1);
  struct Stencil {
    std::vector<std::size_t> digit;
    std::size_t cuts = 0;
    bool viable = true;
  };
  std::vector<Stencil> stencils;
  for (const auto& y : killers) {
    Stencil s;
    s.digit.assign(bubbles.size(), kFree);
    if (y.intersects(outside)) s.viable = false;
    for (std::size_t i = 0; i < bubbles.size() && s.viable; ++i) {
      auto inter = y & bubbles[i];
      auto n = inter.count();
      if (n >= 2) s.viable = false;
      if (n == 1) {
        auto pos = inter.find_first();
        s.digit[i] = static_cast<std::size_t>(
            std::lower_bound(elements[i].begin(), elements[i].end(), pos) - elements[i].begin());
        ++s.cuts;
      }
    }
    stencils.push_back(std::move(s));
  }
  std::vector<std::size_t> order(stencils.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return stencils[a].cuts < stencils[b].cuts; });

  Bitset alive = Bitset::full(total);
  BadnessVerdict v;
  v.method = BadnessMethod::Second;
  std::vector<std::size_t> free_bubbles;
  std::vector<std::size_t> odometer;
  for (auto k : order) {
    if (alive.none()) break;
    const auto& s = stencils[k];
    if (!s.viable) {
      v.victim_counts.push_back(0);
      v.removed_counts.push_back(0);
      continue;
    }
    std::size_t base = 0;
    free_bubbles.clear();
    for (std::size_t i = 0; i < bubbles.size(); ++i) {
      if (s.digit[i] == kFree)
        free_bubbles.push_back(i);
      else
        base += s.digit[i] * strides[i];
    }
    std::size_t victims = 0, removed = 0;
    odometer.assign(free_bubbles.size(), 0);
    while (true) {
      std::size_t idx = base;
      for (std::size_t f = 0; f < free_bubbles.size(); ++f) idx += odometer[f] * strides[free_bubbles[f]];
      ++victims;
      if (alive.test(idx)) {
        alive.reset(idx);
        ++removed;
      }
      bool wrapped = true;
      for (std::size_t f = free_bubbles.size(); f-- > 0;) {
        if (++odometer[f] < elements[free_bubbles[f]].size()) {
          wrapped = false;
          break;
        }
        odometer[f] = 0;
      }
      if (wrapped) break;
    }
    v.victim_counts.push_back(victims);
    v.removed_counts.push_back(removed);
  }
  v.is_bad = alive.none();
  if (keep_survivors) {
    SetFamily s(row.width());
    alive.for_each([&](std::size_t i) { s.add(min_member_at(row, i)); });
    v.survivors = std::move(s);
  }
  return v;
}

BadnessVerdict badness_third(const WildcardRow& row, const SetFamily& killers) {
  BadnessVerdict v;
  v.method = BadnessMethod::Third;
  v.is_bad = !meets_any(row, enumerate_nc(killers));
  return v;
}

BadnessVerdict badness_check(const WildcardRow& row, const Hypergraph& h, const SetFamily* killers,
                             const BadnessConfig& config) {
  if (superkilled(row, h)) {
    BadnessVerdict v;
    v.is_bad = true;
    v.superkilled = true;
    v.survivors = SetFamily(row.width());
    return v;
  }
  auto mode = config.mode;
  if (mode == BadnessMode::Auto) {
    auto p = promise_size(row);
    if (!killers || p <= config.first_max)
      mode = BadnessMode::First;
    else if (p <= config.second_max)
      mode = BadnessMode::Second;
    else
      mode = BadnessMode::Third;
  }
  if (mode != BadnessMode::First && !killers)
    throw std::invalid_argument("the second and third badness tests need the row's killers");
  switch (mode) {
    case BadnessMode::Second:
      return badness_second(row, *killers, false, config.limit);
    case BadnessMode::Third:
      return badness_third(row, *killers);
    default:
      return badness_first(row, h, false, config.limit);
  }
}

}  // namespace hitset
