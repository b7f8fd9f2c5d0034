#include "hitset/mc.hpp"

#include <stdexcept>

#include "hitset/eengine.hpp"
#include "hitset/parallel.hpp"

namespace hitset {

std::vector<std::size_t> crit(std::size_t b, const VertexSet& s, const Hypergraph& h) {
  if (b >= s.size() || !s.test(b)) throw std::invalid_argument("crit: vertex is not in the set");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    const auto& e = h.edge(i);
    if (e.test(b) && e.intersection_count(s) == 1) out.push_back(i);
  }
  return out;
}

bool mc_dud_test(const VertexSet& z, const Hypergraph& h) {
  VertexSet t(z.size());
  for (const auto& e : h.edges()) {
    if (e.intersection_count(z) == 1) {
      t |= e & z;
      if (t == z) return true;
    }
  }
  return t == z;
}

AuxEdges aux_edges(const Hypergraph& h, std::size_t u) {
  AuxEdges aux;
  for (const auto& e : h.edges()) {
    if (!e.test(u)) continue;
    auto rest = e;
    rest.reset(u);
    if (rest.none())
      aux.has_empty = true;
    else
      aux.edges.push_back(std::move(rest));
  }
  return aux;
}

std::vector<VertexSet> minimal_transversals(std::size_t width, const std::vector<VertexSet>& edges) {
  if (edges.empty()) return {VertexSet(width)};
  // Run on the support of the edges so that the hypergraph is full.
  VertexSet support(width);
  for (const auto& e : edges) support |= e;
  auto vertices = support.indices();
  std::vector<std::size_t> local(width, 0);
  for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = i;
  std::vector<VertexSet> small;
  small.reserve(edges.size());
  for (const auto& e : edges) {
    VertexSet s(vertices.size());
    e.for_each([&](std::size_t v) { s.set(local[v]); });
    small.push_back(std::move(s));
  }
  Hypergraph sub(vertices.size(), std::move(small));
  auto semifinal = enumerate_hs(sub);
  auto mu = minimum_rows(semifinal).mu;

  std::vector<VertexSet> out;
  for (const auto& row : semifinal.rows) {
    bool all_minimal = row_degree(row) == mu;
    for (const auto& z : row_min_members(row)) {
      if (!all_minimal && !mc_dud_test(z, sub)) continue;
      VertexSet lifted(width);
      z.for_each([&](std::size_t i) { lifted.set(vertices[i]); });
      out.push_back(std::move(lifted));
    }
  }
  return out;
}

MinNotMCFamily min_not_mc(const Hypergraph& h, std::size_t workers) {
  if (!h.is_full()) throw std::invalid_argument("MinNotMC needs a full hypergraph");
  const std::size_t w = h.width();
  std::vector<std::vector<VertexSet>> per_vertex(w);
  auto work = [&](std::size_t u) {
    auto aux = aux_edges(h, u);
    if (aux.has_empty) return;
    auto ts = minimal_transversals(w, aux.edges);
    for (auto& t : ts) t.set(u);
    per_vertex[u] = std::move(ts);
  };

  parallel_for(w, workers, work);

  SetFamily pooled(w);
  for (auto& list : per_vertex)
    for (auto& s : list) pooled.add(std::move(s));
  return MinNotMCFamily(minimize_family(pooled));
}

std::vector<std::size_t> killer_indices(const WildcardRow& row, const MinNotMCFamily& mnmc) {
  const auto& m = mnmc.matrix;
  auto candidates = m.or_columns(row.zeros() | row.twos()).complement();
  for (const auto& b : row.bubbles()) {
    if (candidates.none()) break;
    candidates -= m.at_least_two(b);
  }
  return candidates.indices();
}

SetFamily killers(const WildcardRow& row, const MinNotMCFamily& mnmc) {
  SetFamily out(row.width());
  for (auto i : killer_indices(row, mnmc)) out.add(mnmc.family[i]);
  return out;
}

bool is_very_good(const WildcardRow& row, const MinNotMCFamily& mnmc) { return killer_indices(row, mnmc).empty(); }

}  // namespace hitset
