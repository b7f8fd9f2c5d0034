#include "hitset/hypergraph.hpp"

#include <algorithm>
#include <sstream>

namespace hitset {

VertexSet vertex_set(std::size_t width, std::initializer_list<std::size_t> vertices) {
  return vertex_set(width, std::vector<std::size_t>(vertices));
}

VertexSet vertex_set(std::size_t width, const std::vector<std::size_t>& vertices) {
  VertexSet s(width);
  for (auto v : vertices) {
    if (v < 1 || v > width)
      throw std::invalid_argument("vertex " + std::to_string(v) + " outside [1," + std::to_string(width) + "]");
    s.set(v - 1);
  }
  return s;
}

std::vector<std::size_t> vertices_of(const VertexSet& s) {
  std::vector<std::size_t> out;
  s.for_each([&](std::size_t i) { out.push_back(i + 1); });
  return out;
}

std::string to_string(const VertexSet& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  s.for_each([&](std::size_t i) {
    if (!first) os << ',';
    os << i + 1;
    first = false;
  });
  os << '}';
  return os.str();
}

SetFamily::SetFamily(std::size_t width, std::vector<VertexSet> members) : width_(width) {
  for (auto& m : members) add(std::move(m));
}

SetFamily::SetFamily(std::size_t width, std::initializer_list<std::initializer_list<std::size_t>> members)
    : width_(width) {
  for (auto m : members) add(vertex_set(width, m));
}

void SetFamily::add(VertexSet member) {
  if (member.size() != width_) throw std::invalid_argument("family member has wrong width");
  members_.push_back(std::move(member));
}

std::vector<VertexSet> SetFamily::sorted_members() const {
  auto v = members_;
  std::sort(v.begin(), v.end());
  return v;
}

bool same_sets(const SetFamily& a, const SetFamily& b) {
  if (a.width() != b.width()) return false;
  auto x = a.sorted_members();
  auto y = b.sorted_members();
  x.erase(std::unique(x.begin(), x.end()), x.end());
  y.erase(std::unique(y.begin(), y.end()), y.end());
  return x == y;
}

Hypergraph::Hypergraph(std::size_t width, std::vector<VertexSet> edges) : width_(width), edges_(std::move(edges)) {
  if (width_ == 0) throw std::invalid_argument("hypergraph width must be positive");
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].size() != width_) throw std::invalid_argument("edge " + std::to_string(i + 1) + " has wrong width");
    if (edges_[i].none()) throw std::invalid_argument("edge " + std::to_string(i + 1) + " is empty");
  }
}

Hypergraph::Hypergraph(std::size_t width, std::initializer_list<std::initializer_list<std::size_t>> edges)
    : width_(width) {
  if (width_ == 0) throw std::invalid_argument("hypergraph width must be positive");
  for (auto e : edges) {
    auto s = vertex_set(width, e);
    if (s.none()) throw std::invalid_argument("empty edge");
    edges_.push_back(std::move(s));
  }
}

bool Hypergraph::is_full() const {
  VertexSet u(width_);
  for (const auto& e : edges_) u |= e;
  return u.all();
}

bool Hypergraph::is_hitting_set(const VertexSet& x) const {
  return std::all_of(edges_.begin(), edges_.end(), [&](const VertexSet& e) { return e.intersects(x); });
}

bool Hypergraph::is_exact_hitting_set(const VertexSet& x) const {
  return std::all_of(edges_.begin(), edges_.end(),
                     [&](const VertexSet& e) { return e.intersection_count(x) == 1; });
}

}  // namespace hitset
