#pragma once

// Text formats. Hypergraph and set-family files: first line `w h`, then h
// lines of ascending 1-based vertices; `#` starts a comment. Graph files for
// matchings: `n m`, then m lines `u v`.

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hitset/hypergraph.hpp"
#include "hitset/row.hpp"

namespace hitset {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

struct ParsedFamily {
  SetFamily family;
  std::vector<std::string> header_comments;  // `#` lines before the size line
};

// Empty members are allowed here; hypergraph parsing rejects them.
ParsedFamily parse_family(std::istream& in);
ParsedFamily parse_family_text(const std::string& text);
Hypergraph parse_hypergraph(std::istream& in);
Hypergraph parse_hypergraph_text(const std::string& text);

struct Graph {
  std::size_t vertices = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};
Graph parse_graph(std::istream& in);

std::string serialize_family(const SetFamily& f);
std::string serialize_hypergraph(const Hypergraph& h);

// FNV-1a over the canonical serialization; keys MinNotMC cache files.
std::uint64_t hypergraph_hash(const Hypergraph& h);
std::string hash_hex(std::uint64_t hash);

// Reads the whole file; throws std::runtime_error when it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace hitset
