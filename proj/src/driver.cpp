#include "hitset/driver.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>

#include "hitset/noncover.hpp"
#include "hitset/parallel.hpp"
#include "hitset/spoiler.hpp"

namespace hitset {

namespace {

std::mt19937_64 row_rng(std::uint64_t seed, std::size_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

VertexSet random_min_member(const WildcardRow& row, const std::vector<std::vector<std::size_t>>& elements,
                            std::mt19937_64& rng) {
  VertexSet x = row.ones();
  for (const auto& e : elements) {
    std::uniform_int_distribution<std::size_t> pick(0, e.size() - 1);
    x.set(e[pick(rng)]);
  }
  return x;
}

std::vector<std::vector<std::size_t>> bubble_elements(const WildcardRow& row) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& b : row.bubbles()) out.push_back(b.indices());
  return out;
}

double to_double(const Count& c) { return c.convert_to<double>(); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

const char* to_string(RowClass c) noexcept {
  switch (c) {
    case RowClass::VeryGood:
      return "very-good";
    case RowClass::MerelyGood:
      return "merely-good";
    case RowClass::Bad:
      return "bad";
    case RowClass::Unresolved:
      return "unresolved";
  }
  return "?";
}

const char* to_string(Likelihood l) noexcept {
  switch (l) {
    case Likelihood::LikelyGood:
      return "likely-good";
    case Likelihood::LikelyBad:
      return "likely-bad";
    case Likelihood::Mixed:
      return "mixed";
  }
  return "?";
}

SampleResult sample_min(const WildcardRow& row, const Hypergraph& h, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto elements = bubble_elements(row);
  SampleResult out{SetFamily(row.width()), 0};
  for (std::size_t i = 0; i < n; ++i) {
    auto x = random_min_member(row, elements, rng);
    if (mc_dud_test(x, h)) ++out.alpha;
    out.samples.add(std::move(x));
  }
  return out;
}

namespace {

RowVerdict classify_one(const Hypergraph& h, const WildcardRow& row, std::size_t index, std::size_t mu,
                        const MinNotMCFamily* mnmc, const DriverConfig& config) {
  RowVerdict v;
  v.row_index = index;
  v.promise = promise_size(row);
  v.degree = row_degree(row);
  if (v.degree == mu) {
    v.row_class = RowClass::VeryGood;
    v.likely = Likelihood::LikelyGood;
    return v;
  }

  auto rng = row_rng(config.seed, index);
  auto elements = bubble_elements(row);
  v.sampled = true;
  v.samples = config.samples;
  for (std::size_t i = 0; i < config.samples; ++i)
    if (mc_dud_test(random_min_member(row, elements, rng), h)) ++v.alpha;
  v.likely = v.alpha == v.samples ? Likelihood::LikelyGood : v.alpha == 0 ? Likelihood::LikelyBad : Likelihood::Mixed;

  if (v.alpha > 0 && v.alpha < v.samples) {
    v.row_class = RowClass::MerelyGood;
    return v;
  }

  if (v.alpha == v.samples && v.samples > 0) {
    if (mnmc) {
      v.row_class = is_very_good(row, *mnmc) ? RowClass::VeryGood : RowClass::MerelyGood;
      return v;
    }
    auto sp = spoiler_count(row, h, config.spoiler_max_edges);
    if (sp.decision != SpoilerDecision::Undecided) {
      v.row_class = sp.decision == SpoilerDecision::VeryGood ? RowClass::VeryGood : RowClass::MerelyGood;
      return v;
    }
    try {
      auto scan = badness_first(row, h, false, config.badness.limit);
      v.row_class = Count(scan.survivors->size()) == v.promise ? RowClass::VeryGood : RowClass::MerelyGood;
    } catch (const LimitExceeded&) {
      v.row_class = RowClass::Unresolved;
    }
    return v;
  }

  // No sampled member survived (or sampling is off): decide badness.
  std::optional<SetFamily> ki;
  if (mnmc) ki = killers(row, *mnmc);
  try {
    auto bad = badness_check(row, h, ki ? &*ki : nullptr, config.badness);
    v.superkilled = bad.superkilled;
    v.badness_method = bad.method;
    if (bad.is_bad) {
      v.row_class = RowClass::Bad;
    } else if (v.samples > 0) {
      v.row_class = RowClass::MerelyGood;
    } else {
      v.row_class = (ki ? ki->empty() : false) ? RowClass::VeryGood : RowClass::MerelyGood;
    }
  } catch (const LimitExceeded&) {
    v.row_class = RowClass::Unresolved;
  }
  return v;
}

}  // namespace

std::vector<RowVerdict> classify_rows(const Hypergraph& h, const SemifinalSet& s, const MinNotMCFamily* mnmc,
                                      const DriverConfig& config) {
  std::vector<RowVerdict> out(s.rows.size());
  if (s.rows.empty()) return out;
  auto mu = minimum_rows(s).mu;
  parallel_for(s.rows.size(), config.workers,
               [&](std::size_t i) { out[i] = classify_one(h, s.rows[i], i, mu, mnmc, config); });
  return out;
}

namespace {

std::size_t choose_bubble(const WildcardRow& row, const SetFamily& ki, BubbleChoice choice) {
  const auto& bs = row.bubbles();
  switch (choice) {
    case BubbleChoice::First:
      return 0;
    case BubbleChoice::Last:
      return bs.size() - 1;
    case BubbleChoice::Smallest: {
      std::size_t best = 0;
      for (std::size_t i = 1; i < bs.size(); ++i)
        if (bs[i].count() < bs[best].count()) best = i;
      return best;
    }
    case BubbleChoice::MaxK0:
      break;
  }
  std::size_t best = 0, best_k0 = 0;
  for (std::size_t i = 0; i < bs.size(); ++i) {
    std::size_t k0 = 0;
    for (const auto& y : ki)
      if (!y.intersects(bs[i])) ++k0;
    if (i == 0 || k0 > best_k0) {
      best = i;
      best_k0 = k0;
    }
  }
  return best;
}

}  // namespace

std::vector<WildcardRow> expand_merely_good(const WildcardRow& row, const SetFamily& row_killers,
                                            BubbleChoice choice) {
  struct Entry {
    WildcardRow row;
    SetFamily killers;
  };
  std::vector<WildcardRow> out;
  if (row_killers.empty()) {
    out.push_back(finalize_e_to_g(row));
    return out;
  }
  std::vector<Entry> stack;
  stack.push_back({row, row_killers});
  while (!stack.empty()) {
    auto top = std::move(stack.back());
    stack.pop_back();
    const auto& r = top.row;
    if (r.bubble_count() == 0) continue;  // a 012 row with killers is superkilled
    auto bi = choose_bubble(r, top.killers, choice);
    const auto bubble = r.bubbles()[bi];
    auto elements = bubble.indices();
    std::optional<NoncoverSet> parent_nc;

    std::vector<Entry> pending;
    for (std::size_t j = 0; j < elements.size(); ++j) {
      auto p = r.parts();
      p.bubbles.erase(p.bubbles.begin() + static_cast<std::ptrdiff_t>(bi));
      for (std::size_t i = 0; i < elements.size(); ++i) {
        if (i < j)
          p.zeros.set(elements[i]);
        else if (i == j)
          p.ones.set(elements[i]);
        else
          p.twos.set(elements[i]);
      }
      auto son = *WildcardRow::from_parts(std::move(p));
      auto single = VertexSet(r.width());
      single.set(elements[j]);
      SetFamily son_killers(r.width());
      for (const auto& y : top.killers)
        if ((y & bubble).is_subset_of(single)) son_killers.add(y);

      if (son_killers.empty()) {
        out.push_back(finalize_e_to_g(son));
        continue;
      }
      if (!parent_nc) parent_nc = enumerate_nc(top.killers);
      bool good = meets_any(son, *parent_nc) || !badness_third(son, son_killers).is_bad;
      if (good) pending.push_back({std::move(son), std::move(son_killers)});
    }
    for (auto it = pending.rbegin(); it != pending.rend(); ++it) stack.push_back(std::move(*it));
  }
  return out;
}

Estimate estimate_total(const std::vector<RowVerdict>& verdicts, const SemifinalSet& s) {
  Estimate e;
  for (const auto& v : verdicts) {
    switch (v.row_class) {
      case RowClass::VeryGood:
        e.very_good_exact += v.promise;
        break;
      case RowClass::MerelyGood:
        if (v.samples > 0)
          e.merely_good += to_double(v.promise) * static_cast<double>(v.alpha) / static_cast<double>(v.samples);
        break;
      default:
        break;
    }
  }
  e.factor = verdicts.empty() ? 1.0 : static_cast<double>(s.rows.size()) / static_cast<double>(verdicts.size());
  e.total = (to_double(e.very_good_exact) + e.merely_good) * e.factor;
  return e;
}

RowTypeShares row_type_shares(const std::vector<RowVerdict>& verdicts) {
  RowTypeShares s;
  if (verdicts.empty()) return s;
  for (const auto& v : verdicts) {
    switch (v.row_class) {
      case RowClass::VeryGood:
        s.very_good += 1;
        break;
      case RowClass::MerelyGood:
        s.merely_good += 1;
        break;
      case RowClass::Bad:
        s.bad += 1;
        break;
      case RowClass::Unresolved:
        s.unresolved += 1;
        break;
    }
  }
  double n = static_cast<double>(verdicts.size());
  s.very_good *= 100 / n;
  s.merely_good *= 100 / n;
  s.bad *= 100 / n;
  s.unresolved *= 100 / n;
  return s;
}

MinhitResult minhit(const Hypergraph& h, const DriverConfig& config, const MinNotMCFamily* mnmc) {
  using clock = std::chrono::steady_clock;
  MinhitResult res;
  res.grade = config.grade;

  auto t0 = clock::now();
  EngineOptions eo;
  eo.feasibility = config.feasibility;
  eo.cutoff = config.cutoff;
  res.semifinal = enumerate_hs(h, eo);
  res.stats.seconds_semifinal = seconds_since(t0);
  const auto& rows = res.semifinal.rows;
  res.stats.rows = rows.size();
  if (rows.empty()) {
    if (config.grade == Grade::First) res.exact_count = Count(0);
    return res;
  }

  auto mins = minimum_rows(res.semifinal);
  res.stats.mu = mins.mu;
  double promise_sum = 0, degree_sum = 0;
  for (const auto& r : rows) {
    promise_sum += to_double(promise_size(r));
    degree_sum += static_cast<double>(row_degree(r));
  }
  res.stats.average_promise = promise_sum / static_cast<double>(rows.size());
  res.stats.average_degree = degree_sum / static_cast<double>(rows.size());
  for (auto i : mins.indices) res.stats.minimum_count += promise_size(rows[i]);

  t0 = clock::now();
  std::optional<MinNotMCFamily> own;
  if (!mnmc && config.use_mnmc) {
    own = min_not_mc(h, config.workers);
    mnmc = &*own;
  }
  if (mnmc) res.stats.mnmc_size = mnmc->size();
  res.stats.seconds_mnmc = seconds_since(t0);

  t0 = clock::now();
  res.verdicts = classify_rows(h, res.semifinal, mnmc, config);
  res.stats.seconds_classify = seconds_since(t0);
  res.stats.shares = row_type_shares(res.verdicts);
  for (const auto& v : res.verdicts)
    if (v.superkilled) ++res.stats.superkilled;
  res.estimate = estimate_total(res.verdicts, res.semifinal);

  if (config.grade == Grade::Second) return res;

  std::size_t unresolved = 0;
  for (const auto& v : res.verdicts)
    if (v.row_class == RowClass::Unresolved) ++unresolved;
  if (unresolved)
    throw UnresolvedVerdicts(std::to_string(unresolved) + " semifinal rows could not be classified");

  t0 = clock::now();
  std::vector<std::vector<WildcardRow>> per_row(rows.size());
  parallel_for(rows.size(), config.workers, [&](std::size_t i) {
    const auto& r = rows[i];
    switch (res.verdicts[i].row_class) {
      case RowClass::VeryGood:
        per_row[i].push_back(finalize_e_to_g(r));
        break;
      case RowClass::MerelyGood:
        if (mnmc) {
          per_row[i] = expand_merely_good(r, killers(r, *mnmc), config.bubble_choice);
        } else {
          auto scan = badness_first(r, h, false, config.badness.limit);
          for (const auto& z : *scan.survivors)
            per_row[i].emplace_back(h.width(), RowKind::G, z.complement(), z, VertexSet(h.width()),
                                    std::vector<VertexSet>{});
        }
        break;
      default:
        break;
    }
  });
  res.stats.seconds_expand = seconds_since(t0);
  Count total = 0;
  for (auto& list : per_row)
    for (auto& r : list) {
      total += row_cardinality(r);
      res.final_rows.push_back(std::move(r));
    }
  res.exact_count = total;
  return res;
}

Hypergraph random_hypergraph(const Signature& sig) {
  const auto w = sig.w, h = sig.h, k = sig.k;
  if (w == 0 || h == 0 || k == 0) throw std::invalid_argument("signature entries must be positive");
  if (k > w) throw std::invalid_argument("edge size exceeds the ground set");
  if (k * h < w) throw std::invalid_argument("k*h < w: the edges cannot cover the ground set");
  Count binom = 1;
  for (std::size_t i = 0; i < k; ++i) binom = binom * (w - i) / (i + 1);
  if (binom < h) throw std::invalid_argument("fewer than h distinct k-subsets exist");

  std::mt19937_64 rng(sig.seed);
  std::vector<std::size_t> pool(w);
  std::set<VertexSet> seen;
  std::vector<VertexSet> edges;
  while (edges.size() < h) {
    for (std::size_t i = 0; i < w; ++i) pool[i] = i;
    VertexSet e(w);
    for (std::size_t i = 0; i < k; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, w - 1);
      std::swap(pool[i], pool[pick(rng)]);
      e.set(pool[i]);
    }
    if (seen.insert(e).second) edges.push_back(std::move(e));
  }

  std::vector<std::size_t> cover(w, 0);
  for (const auto& e : edges) e.for_each([&](std::size_t v) { ++cover[v]; });
  for (std::size_t v = 0; v < w; ++v) {
    if (cover[v]) continue;
    bool placed = false;
    for (int attempt = 0; attempt < 1000 && !placed; ++attempt) {
      std::uniform_int_distribution<std::size_t> pick_edge(0, h - 1);
      auto& e = edges[pick_edge(rng)];
      auto members = e.indices();
      std::uniform_int_distribution<std::size_t> pick_member(0, members.size() - 1);
      auto x = members[pick_member(rng)];
      if (cover[x] < 2) continue;
      auto repl = e;
      repl.reset(x);
      repl.set(v);
      if (seen.count(repl)) continue;
      seen.erase(e);
      seen.insert(repl);
      e = std::move(repl);
      --cover[x];
      ++cover[v];
      placed = true;
    }
    for (std::size_t ei = 0; ei < h && !placed; ++ei) {
      for (auto x : edges[ei].indices()) {
        if (cover[x] < 2) continue;
        auto repl = edges[ei];
        repl.reset(x);
        repl.set(v);
        if (seen.count(repl)) continue;
        seen.erase(edges[ei]);
        seen.insert(repl);
        edges[ei] = std::move(repl);
        --cover[x];
        ++cover[v];
        placed = true;
        break;
      }
    }
    if (!placed) throw std::invalid_argument("could not repair the hypergraph to be full");
  }
  return Hypergraph(w, std::move(edges));
}

SetFamily sample_mhs(const Hypergraph& h, const SemifinalSet& s, std::size_t n, std::uint64_t seed,
                     std::size_t max_attempts) {
  SetFamily out(h.width());
  if (n == 0) return out;
  if (s.rows.empty()) throw std::invalid_argument("no semifinal rows to sample from");
  std::vector<double> weights;
  std::vector<std::vector<std::vector<std::size_t>>> elements;
  for (const auto& r : s.rows) {
    weights.push_back(to_double(promise_size(r)));
    elements.push_back(bubble_elements(r));
  }
  std::mt19937_64 rng(seed);
  std::discrete_distribution<std::size_t> pick_row(weights.begin(), weights.end());
  for (std::size_t attempt = 0; attempt < max_attempts && out.size() < n; ++attempt) {
    auto i = pick_row(rng);
    auto x = random_min_member(s.rows[i], elements[i], rng);
    if (mc_dud_test(x, h)) out.add(std::move(x));
  }
  if (out.size() < n) throw std::runtime_error("sampling gave up before collecting enough minimal hitting sets");
  return out;
}

}  // namespace hitset
