#include "hitset/row.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace hitset {

char kind_letter(RowKind k) noexcept {
  switch (k) {
    case RowKind::G:
      return 'g';
    case RowKind::E:
      return 'e';
    case RowKind::N:
      return 'n';
  }
  return '?';
}

RowKind kind_from_letter(char c) {
  switch (std::tolower(static_cast<unsigned char>(c))) {
    case 'g':
      return RowKind::G;
    case 'e':
      return RowKind::E;
    case 'n':
      return RowKind::N;
    default:
      throw std::invalid_argument(std::string("unknown wildcard kind '") + c + "'");
  }
}

WildcardRow::WildcardRow(std::size_t width, RowKind kind, VertexSet zeros, VertexSet ones, VertexSet twos,
                         std::vector<VertexSet> bubbles)
    : width_(width), kind_(kind), zeros_(std::move(zeros)), ones_(std::move(ones)), twos_(std::move(twos)),
      bubbles_(std::move(bubbles)) {
  auto check_width = [&](const VertexSet& s) {
    if (s.size() != width_) throw std::invalid_argument("row component has wrong width");
  };
  check_width(zeros_);
  check_width(ones_);
  check_width(twos_);
  VertexSet seen(width_);
  std::size_t total = 0;
  auto account = [&](const VertexSet& s) {
    if (seen.intersects(s)) throw std::invalid_argument("row components overlap");
    seen |= s;
    total += s.count();
  };
  account(zeros_);
  account(ones_);
  account(twos_);
  for (const auto& b : bubbles_) {
    check_width(b);
    if (b.none()) throw std::invalid_argument("empty bubble");
    account(b);
  }
  if (total != width_) throw std::invalid_argument("row components do not cover every position");
  normalize();
}

WildcardRow::WildcardRow(Trusted, Parts p)
    : width_(p.width), kind_(p.kind), zeros_(std::move(p.zeros)), ones_(std::move(p.ones)), twos_(std::move(p.twos)),
      bubbles_(std::move(p.bubbles)) {
  normalize();
}

std::optional<WildcardRow> WildcardRow::from_parts(Parts p) {
  for (const auto& b : p.bubbles)
    if (b.none()) return std::nullopt;
  return WildcardRow(Trusted{}, std::move(p));
}

WildcardRow WildcardRow::all_twos(std::size_t width, RowKind kind) {
  return WildcardRow(Trusted{}, Parts{width, kind, VertexSet(width), VertexSet(width), VertexSet::full(width), {}});
}

void WildcardRow::normalize() {
  std::vector<VertexSet> kept;
  kept.reserve(bubbles_.size());
  for (auto& b : bubbles_) {
    if (b.count() == 1) {
      if (kind_ == RowKind::N)
        zeros_ |= b;
      else
        ones_ |= b;
    } else {
      kept.push_back(std::move(b));
    }
  }
  std::sort(kept.begin(), kept.end(),
            [](const VertexSet& a, const VertexSet& b) { return a.find_first() < b.find_first(); });
  bubbles_ = std::move(kept);
}

VertexSet WildcardRow::bubble_union() const {
  VertexSet u(width_);
  for (const auto& b : bubbles_) u |= b;
  return u;
}

Count row_cardinality(const WildcardRow& row) {
  Count c = 1;
  c <<= row.twos().count();
  for (const auto& b : row.bubbles()) {
    auto s = b.count();
    if (row.kind() == RowKind::G) {
      c *= s;
    } else {
      Count f = 1;
      f <<= s;
      c *= (f - 1);
    }
  }
  return c;
}

bool row_contains(const WildcardRow& row, const VertexSet& x) {
  if (x.size() != row.width()) return false;
  if (x.intersects(row.zeros())) return false;
  if (!row.ones().is_subset_of(x)) return false;
  for (const auto& b : row.bubbles()) {
    auto k = b.intersection_count(x);
    switch (row.kind()) {
      case RowKind::G:
        if (k != 1) return false;
        break;
      case RowKind::E:
        if (k < 1) return false;
        break;
      case RowKind::N:
        if (k == b.count()) return false;
        break;
    }
  }
  return true;
}

Count promise_size(const WildcardRow& row) {
  Count c = 1;
  for (const auto& b : row.bubbles()) c *= b.count();
  return c;
}

std::size_t row_degree(const WildcardRow& row) { return row.ones().count() + row.bubble_count(); }

namespace {

std::size_t checked_promise(const WildcardRow& row) {
  std::size_t n = 1;
  for (const auto& b : row.bubbles()) {
    auto s = b.count();
    if (s != 0 && n > (std::size_t{1} << 40) / s) throw LimitExceeded("promise too large to enumerate");
    n *= s;
  }
  return n;
}

}  // namespace

std::vector<std::size_t> min_member_strides(const WildcardRow& row) {
  std::vector<std::size_t> strides(row.bubble_count());
  std::size_t s = 1;
  for (std::size_t i = row.bubble_count(); i-- > 0;) {
    strides[i] = s;
    s *= row.bubbles()[i].count();
  }
  return strides;
}

VertexSet min_member_at(const WildcardRow& row, std::size_t index) {
  VertexSet x = row.ones();
  for (std::size_t i = row.bubble_count(); i-- > 0;) {
    const auto& b = row.bubbles()[i];
    auto s = b.count();
    auto digit = index % s;
    index /= s;
    auto pos = b.find_first();
    for (std::size_t d = 0; d < digit; ++d) pos = b.find_next(pos + 1);
    x.set(pos);
  }
  return x;
}

SetFamily row_min_members(const WildcardRow& row) {
  auto n = checked_promise(row);
  std::vector<std::vector<std::size_t>> elems;
  for (const auto& b : row.bubbles()) elems.push_back(b.indices());
  SetFamily out(row.width());
  std::vector<std::size_t> digit(elems.size(), 0);
  for (std::size_t k = 0; k < n; ++k) {
    VertexSet x = row.ones();
    for (std::size_t i = 0; i < elems.size(); ++i) x.set(elems[i][digit[i]]);
    out.add(std::move(x));
    for (std::size_t i = elems.size(); i-- > 0;) {
      if (++digit[i] < elems[i].size()) break;
      digit[i] = 0;
    }
  }
  return out;
}

SetFamily row_max_members(const WildcardRow& row) {
  auto n = checked_promise(row);
  std::vector<std::vector<std::size_t>> elems;
  for (const auto& b : row.bubbles()) elems.push_back(b.indices());
  VertexSet base = row.ones() | row.twos() | row.bubble_union();
  SetFamily out(row.width());
  std::vector<std::size_t> digit(elems.size(), 0);
  for (std::size_t k = 0; k < n; ++k) {
    VertexSet x = base;
    for (std::size_t i = 0; i < elems.size(); ++i) x.reset(elems[i][digit[i]]);
    out.add(std::move(x));
    for (std::size_t i = elems.size(); i-- > 0;) {
      if (++digit[i] < elems[i].size()) break;
      digit[i] = 0;
    }
  }
  return out;
}

WildcardRow finalize_e_to_g(const WildcardRow& row) {
  if (row.kind() != RowKind::E) throw std::invalid_argument("finalize_e_to_g expects an E row");
  auto p = row.parts();
  p.kind = RowKind::G;
  p.zeros |= p.twos;
  p.twos.clear();
  return *WildcardRow::from_parts(std::move(p));
}

namespace {

class MemberWalker {
 public:
  MemberWalker(const WildcardRow& row, const std::function<bool(const VertexSet&)>& visit)
      : row_(row), visit_(visit), current_(row.width()), bubble_of_(row.width(), kNone) {
    for (std::size_t i = 0; i < row.bubble_count(); ++i) {
      std::size_t last = 0;
      row.bubbles()[i].for_each([&](std::size_t p) {
        bubble_of_[p] = i;
        last = p;
      });
      last_.push_back(last);
    }
    ones_in_.assign(row.bubble_count(), 0);
    zeros_in_.assign(row.bubble_count(), 0);
  }

  void run() { walk(0); }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  // Returns false once the visitor asked to stop.
  bool walk(std::size_t p) {
    if (p == row_.width()) return visit_(current_);
    if (row_.zeros().test(p)) return walk(p + 1);
    if (row_.ones().test(p)) {
      current_.set(p);
      bool go = walk(p + 1);
      current_.reset(p);
      return go;
    }
    auto b = bubble_of_[p];
    if (b == kNone) {
      if (!walk(p + 1)) return false;
      current_.set(p);
      bool go = walk(p + 1);
      current_.reset(p);
      return go;
    }
    bool more = p < last_[b];
    bool allow0 = true, allow1 = true;
    switch (row_.kind()) {
      case RowKind::G:
        allow0 = ones_in_[b] == 1 || more;
        allow1 = ones_in_[b] == 0;
        break;
      case RowKind::E:
        allow0 = ones_in_[b] >= 1 || more;
        break;
      case RowKind::N:
        allow1 = zeros_in_[b] >= 1 || more;
        break;
    }
    if (allow0) {
      ++zeros_in_[b];
      bool go = walk(p + 1);
      --zeros_in_[b];
      if (!go) return false;
    }
    if (allow1) {
      ++ones_in_[b];
      current_.set(p);
      bool go = walk(p + 1);
      current_.reset(p);
      --ones_in_[b];
      if (!go) return false;
    }
    return true;
  }

  const WildcardRow& row_;
  const std::function<bool(const VertexSet&)>& visit_;
  VertexSet current_;
  std::vector<std::size_t> bubble_of_;
  std::vector<std::size_t> last_;
  std::vector<std::size_t> ones_in_, zeros_in_;
};

}  // namespace

void for_each_member(const WildcardRow& row, const std::function<bool(const VertexSet&)>& visit) {
  MemberWalker(row, visit).run();
}

std::vector<VertexSet> expand_row(const WildcardRow& row, std::size_t limit) {
  auto card = row_cardinality(row);
  if (card > limit)
    throw LimitExceeded("row has " + card.str() + " members, limit is " + std::to_string(limit));
  std::vector<VertexSet> out;
  out.reserve(static_cast<std::size_t>(card));
  for_each_member(row, [&](const VertexSet& x) {
    out.push_back(x);
    return true;
  });
  return out;
}

std::string serialize_row(const WildcardRow& row) {
  std::vector<std::string> tok(row.width());
  for (std::size_t p = 0; p < row.width(); ++p) {
    if (row.zeros().test(p))
      tok[p] = "0";
    else if (row.ones().test(p))
      tok[p] = "1";
    else if (row.twos().test(p))
      tok[p] = "2";
  }
  for (std::size_t i = 0; i < row.bubble_count(); ++i) {
    std::string t = std::string(1, kind_letter(row.kind())) + std::to_string(i + 1);
    row.bubbles()[i].for_each([&](std::size_t p) { tok[p] = t; });
  }
  std::string out;
  for (std::size_t p = 0; p < tok.size(); ++p) {
    if (p) out += ' ';
    out += tok[p];
  }
  return out;
}

WildcardRow parse_row(std::string_view text, RowKind kind_hint) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> tokens;
  for (std::string t; in >> t;) tokens.push_back(t);
  std::size_t w = tokens.size();
  if (w == 0) throw std::invalid_argument("empty row");
  VertexSet zeros(w), ones(w), twos(w);
  std::map<std::size_t, VertexSet> bubbles;
  std::optional<RowKind> kind;
  for (std::size_t p = 0; p < w; ++p) {
    const auto& t = tokens[p];
    if (t == "0") {
      zeros.set(p);
    } else if (t == "1") {
      ones.set(p);
    } else if (t == "2") {
      twos.set(p);
    } else {
      auto k = kind_from_letter(t[0]);
      if (kind && *kind != k) throw std::invalid_argument("row mixes wildcard kinds");
      kind = k;
      std::size_t idx = 0;
      auto rest = t.substr(1);
      if (rest.empty() || !std::all_of(rest.begin(), rest.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw std::invalid_argument("bad row token '" + t + "'");
      idx = std::stoul(rest);
      if (idx == 0) throw std::invalid_argument("bubble index must be positive in '" + t + "'");
      auto [it, inserted] = bubbles.try_emplace(idx, VertexSet(w));
      it->second.set(p);
    }
  }
  std::vector<VertexSet> bs;
  for (auto& [_, b] : bubbles) bs.push_back(std::move(b));
  return WildcardRow(w, kind.value_or(kind_hint), std::move(zeros), std::move(ones), std::move(twos), std::move(bs));
}

}  // namespace hitset
