#include "hitset/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace hitset {

namespace {

// Splits off the comment and returns whitespace-separated numbers.
std::vector<std::size_t> numbers_on(const std::string& raw, std::size_t lineno) {
  auto line = raw.substr(0, raw.find('#'));
  std::vector<std::size_t> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, value);
    if (ec != std::errc() || ptr != line.data() + j)
      throw ParseError(lineno, "expected a nonnegative integer, got '" + line.substr(i, j - i) + "'");
    out.push_back(value);
    i = j;
  }
  return out;
}

bool blank(const std::string& raw) {
  auto line = raw.substr(0, raw.find('#'));
  for (char c : line)
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

ParsedFamily parse_family(std::istream& in) {
  std::string raw;
  std::size_t lineno = 0;
  ParsedFamily out;
  std::size_t w = 0, h = 0;
  bool header = false;
  while (std::getline(in, raw)) {
    ++lineno;
    if (blank(raw)) {
      auto hash = raw.find('#');
      if (!header && hash != std::string::npos) out.header_comments.push_back(raw.substr(hash + 1));
      continue;
    }
    auto nums = numbers_on(raw, lineno);
    if (nums.size() != 2) throw ParseError(lineno, "expected `w h`");
    w = nums[0];
    h = nums[1];
    if (w == 0) throw ParseError(lineno, "width must be positive");
    header = true;
    break;
  }
  if (!header) throw ParseError(lineno == 0 ? 1 : lineno, "missing `w h` line");
  out.family = SetFamily(w);
  // Member lines may be empty (the empty set) only when written as a bare `-`.
  while (out.family.size() < h && std::getline(in, raw)) {
    ++lineno;
    auto body = raw.substr(0, raw.find('#'));
    auto first = body.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    VertexSet s(w);
    if (body[first] == '-' && body.find_first_not_of(" \t\r", first + 1) == std::string::npos) {
      out.family.add(std::move(s));
      continue;
    }
    std::size_t prev = 0;
    for (auto v : numbers_on(raw, lineno)) {
      if (v < 1 || v > w) throw ParseError(lineno, "vertex " + std::to_string(v) + " outside [1," + std::to_string(w) + "]");
      if (v <= prev) throw ParseError(lineno, "vertices must be strictly ascending");
      prev = v;
      s.set(v - 1);
    }
    out.family.add(std::move(s));
  }
  if (out.family.size() < h)
    throw ParseError(lineno + 1, "expected " + std::to_string(h) + " members, found " + std::to_string(out.family.size()));
  while (std::getline(in, raw)) {
    ++lineno;
    if (!blank(raw)) throw ParseError(lineno, "unexpected content after the last member");
  }
  return out;
}

ParsedFamily parse_family_text(const std::string& text) {
  std::istringstream in(text);
  return parse_family(in);
}

Hypergraph parse_hypergraph(std::istream& in) {
  std::string raw;
  std::size_t lineno = 0;
  std::size_t w = 0, h = 0;
  bool header = false;
  while (!header && std::getline(in, raw)) {
    ++lineno;
    if (blank(raw)) continue;
    auto nums = numbers_on(raw, lineno);
    if (nums.size() != 2) throw ParseError(lineno, "expected `w h`");
    w = nums[0];
    h = nums[1];
    if (w == 0) throw ParseError(lineno, "width must be positive");
    header = true;
  }
  if (!header) throw ParseError(lineno == 0 ? 1 : lineno, "missing `w h` line");
  std::vector<VertexSet> edges;
  while (edges.size() < h && std::getline(in, raw)) {
    ++lineno;
    if (blank(raw)) continue;
    VertexSet s(w);
    std::size_t prev = 0;
    for (auto v : numbers_on(raw, lineno)) {
      if (v < 1 || v > w) throw ParseError(lineno, "vertex " + std::to_string(v) + " outside [1," + std::to_string(w) + "]");
      if (v <= prev) throw ParseError(lineno, "vertices must be strictly ascending");
      prev = v;
      s.set(v - 1);
    }
    edges.push_back(std::move(s));
  }
  if (edges.size() < h)
    throw ParseError(lineno + 1, "expected " + std::to_string(h) + " edges, found " + std::to_string(edges.size()));
  while (std::getline(in, raw)) {
    ++lineno;
    if (!blank(raw)) throw ParseError(lineno, "unexpected content after the last edge");
  }
  return Hypergraph(w, std::move(edges));
}

Hypergraph parse_hypergraph_text(const std::string& text) {
  std::istringstream in(text);
  return parse_hypergraph(in);
}

Graph parse_graph(std::istream& in) {
  std::string raw;
  std::size_t lineno = 0;
  Graph g;
  std::size_t m = 0;
  bool header = false;
  while (!header && std::getline(in, raw)) {
    ++lineno;
    if (blank(raw)) continue;
    auto nums = numbers_on(raw, lineno);
    if (nums.size() != 2) throw ParseError(lineno, "expected `n m`");
    g.vertices = nums[0];
    m = nums[1];
    if (g.vertices == 0) throw ParseError(lineno, "vertex count must be positive");
    header = true;
  }
  if (!header) throw ParseError(lineno == 0 ? 1 : lineno, "missing `n m` line");
  while (g.edges.size() < m && std::getline(in, raw)) {
    ++lineno;
    if (blank(raw)) continue;
    auto nums = numbers_on(raw, lineno);
    if (nums.size() != 2) throw ParseError(lineno, "expected `u v`");
    for (auto v : nums)
      if (v < 1 || v > g.vertices) throw ParseError(lineno, "vertex " + std::to_string(v) + " out of range");
    if (nums[0] == nums[1]) throw ParseError(lineno, "loops are not allowed");
    g.edges.emplace_back(nums[0], nums[1]);
  }
  if (g.edges.size() < m) throw ParseError(lineno + 1, "expected " + std::to_string(m) + " edges");
  return g;
}

std::string serialize_family(const SetFamily& f) {
  std::ostringstream os;
  os << f.width() << ' ' << f.size() << '\n';
  for (const auto& m : f) {
    if (m.none()) {
      os << "-\n";
      continue;
    }
    bool first = true;
    m.for_each([&](std::size_t i) {
      if (!first) os << ' ';
      os << i + 1;
      first = false;
    });
    os << '\n';
  }
  return os.str();
}

std::string serialize_hypergraph(const Hypergraph& h) { return serialize_family(h.as_family()); }

std::uint64_t hypergraph_hash(const Hypergraph& h) {
  std::uint64_t hash = 14695981039346656037ULL;
  for (unsigned char c : serialize_hypergraph(h)) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  return hash;
}

std::string hash_hex(std::uint64_t hash) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[static_cast<std::size_t>(i)] = digits[hash & 0xF];
    hash >>= 4;
  }
  return s;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace hitset
