#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hitset/bitset.hpp"

namespace hitset {

// Exact counts of set families; rows routinely describe more than 2^64 sets.
using Count = boost::multiprecision::cpp_int;

// Raised when an operation would have to expand more members than allowed.
class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Builds a vertex set over [width] from 1-based vertex numbers.
VertexSet vertex_set(std::size_t width, std::initializer_list<std::size_t> vertices);
VertexSet vertex_set(std::size_t width, const std::vector<std::size_t>& vertices);
// 1-based vertex numbers of a set, ascending.
std::vector<std::size_t> vertices_of(const VertexSet& s);
// Compact rendering such as "{1,3,5}".
std::string to_string(const VertexSet& s);

class SetFamily {
 public:
  SetFamily() = default;
  explicit SetFamily(std::size_t width) : width_(width) {}
  SetFamily(std::size_t width, std::vector<VertexSet> members);
  SetFamily(std::size_t width, std::initializer_list<std::initializer_list<std::size_t>> members);

  std::size_t width() const noexcept { return width_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  const std::vector<VertexSet>& members() const noexcept { return members_; }
  const VertexSet& operator[](std::size_t i) const { return members_[i]; }

  void add(VertexSet member);

  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  // Members sorted canonically; for order-insensitive comparisons.
  std::vector<VertexSet> sorted_members() const;

  friend bool operator==(const SetFamily&, const SetFamily&) = default;

 private:
  std::size_t width_ = 0;
  std::vector<VertexSet> members_;
};

// Two families are equal as sets of sets (order and duplicates ignored).
bool same_sets(const SetFamily& a, const SetFamily& b);

class Hypergraph {
 public:
  Hypergraph() = default;
  // Throws std::invalid_argument on width 0, empty edges or out-of-range vertices.
  Hypergraph(std::size_t width, std::vector<VertexSet> edges);
  Hypergraph(std::size_t width, std::initializer_list<std::initializer_list<std::size_t>> edges);

  std::size_t width() const noexcept { return width_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<VertexSet>& edges() const noexcept { return edges_; }
  const VertexSet& edge(std::size_t i) const { return edges_[i]; }

  // Union of the edges is all of [w].
  bool is_full() const;
  bool is_hitting_set(const VertexSet& x) const;
  bool is_exact_hitting_set(const VertexSet& x) const;

  SetFamily as_family() const { return SetFamily(width_, edges_); }

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  std::size_t width_ = 0;
  std::vector<VertexSet> edges_;
};

}  // namespace hitset
