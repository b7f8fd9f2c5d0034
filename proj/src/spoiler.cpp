#include "hitset/spoiler.hpp"

#include <algorithm>
#include <unordered_map>

namespace hitset {

PotentialSpoilers potential_spoiler_rows(const WildcardRow& row) {
  const auto w = row.width();
  PotentialSpoilers out;
  auto bubbles_union = row.bubble_union();
  row.ones().for_each([&](std::size_t a) {
    auto ones = row.ones();
    ones.reset(a);
    auto zeros = (ones | bubbles_union).complement();
    out.rows.emplace_back(w, RowKind::G, std::move(zeros), std::move(ones), VertexSet(w), row.bubbles());
  });
  for (std::size_t k = 0; k < row.bubble_count(); ++k) {
    auto bubbles = row.bubbles();
    bubbles.erase(bubbles.begin() + static_cast<std::ptrdiff_t>(k));
    auto zeros = (row.ones() | bubbles_union).complement() | row.bubbles()[k];
    out.rows.emplace_back(w, RowKind::G, std::move(zeros), row.ones(), VertexSet(w), std::move(bubbles));
  }
  for (const auto& r : out.rows) out.pot += row_cardinality(r);
  return out;
}

Count n_term(const std::vector<WildcardRow>& spoiler_rows, const VertexSet& u) {
  Count total = 0;
  for (const auto& r : spoiler_rows) {
    if (r.ones().intersects(u)) continue;
    Count c = 1;
    for (const auto& b : r.bubbles()) {
      auto left = b.count() - b.intersection_count(u);
      if (left == 0) {
        c = 0;
        break;
      }
      c *= left;
    }
    total += c;
  }
  return total;
}

namespace {

class TermSums {
 public:
  TermSums(const std::vector<WildcardRow>& rows, const Hypergraph& h) : rows_(rows), h_(h) {}

  // sums[j] = sum of N(I) over |I| = j, for j <= depth.
  std::vector<Count> level_sums(std::size_t depth) {
    std::vector<Count> sums(depth + 1, 0);
    VertexSet u(h_.width());
    sums[0] = n(u);
    dfs(0, 0, depth, u, sums);
    return sums;
  }

  std::size_t evaluated() const noexcept { return evaluated_; }

 private:
  const Count& n(const VertexSet& u) {
    auto it = memo_.find(u);
    if (it == memo_.end()) {
      ++evaluated_;
      it = memo_.emplace(u, n_term(rows_, u)).first;
    }
    return it->second;
  }

  void dfs(std::size_t start, std::size_t size, std::size_t depth, const VertexSet& u, std::vector<Count>& sums) {
    if (size == depth) return;
    for (std::size_t i = start; i < h_.edge_count(); ++i) {
      auto grown = u | h_.edge(i);
      const auto& term = n(grown);
      if (term == 0) continue;  // every superset of I yields 0 as well
      sums[size + 1] += term;
      dfs(i + 1, size + 1, depth, grown, sums);
    }
  }

  const std::vector<WildcardRow>& rows_;
  const Hypergraph& h_;
  std::unordered_map<VertexSet, Count, BitsetHash> memo_;
  std::size_t evaluated_ = 0;
};

Count alternating(const std::vector<Count>& sums, std::size_t upto) {
  Count p = 0;
  for (std::size_t j = 0; j <= upto && j < sums.size(); ++j) {
    if (j % 2)
      p -= sums[j];
    else
      p += sums[j];
  }
  return p;
}

}  // namespace

SpoilerVerdict spoiler_count(const WildcardRow& row, const Hypergraph& h, std::size_t max_full_edges) {
  auto pot = potential_spoiler_rows(row);
  TermSums terms(pot.rows, h);
  SpoilerVerdict v;
  v.pot = pot.pot;
  v.upper = pot.pot;

  auto sums = terms.level_sums(std::min<std::size_t>(3, h.edge_count()));
  sums.resize(4, 0);
  v.level_sums = sums;
  auto p1 = alternating(sums, 1), p2 = alternating(sums, 2), p3 = alternating(sums, 3);
  v.lower = std::max<Count>({Count(0), p1, p3});
  v.upper = std::min(pot.pot, p2);
  v.terms_evaluated = terms.evaluated();

  auto decide = [&](SpoilerDecision d, int level) {
    v.decision = d;
    v.level = level;
    if (d == SpoilerDecision::VeryGood) {
      v.sp = Count(0);
      v.lower = 0;
      v.upper = Count(0);
    }
    return v;
  };
  if (p1 > 0) return decide(SpoilerDecision::NotVeryGood, 1);
  if (p2 <= 0) return decide(SpoilerDecision::VeryGood, 2);
  if (p3 > 0) return decide(SpoilerDecision::NotVeryGood, 3);
  if (h.edge_count() > max_full_edges) return v;

  auto full = terms.level_sums(h.edge_count());
  v.level_sums = full;
  v.terms_evaluated = terms.evaluated();
  auto sp = alternating(full, h.edge_count());
  v.sp = sp;
  v.lower = sp;
  v.upper = sp;
  v.decision = sp == 0 ? SpoilerDecision::VeryGood : SpoilerDecision::NotVeryGood;
  v.level = 0;
  return v;
}

bool goodness_guarantee(const WildcardRow& row, const Count& sp) {
  if (row.bubble_count() == 0) return sp == 0;
  std::vector<std::size_t> eps;
  for (const auto& b : row.bubbles()) eps.push_back(b.count());
  std::sort(eps.begin(), eps.end());
  Count bound = 1;
  for (std::size_t i = 0; i + 1 < eps.size(); ++i) bound *= eps[i];
  return sp < bound;
}

}  // namespace hitset
