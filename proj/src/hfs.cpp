#include "zflab/hfs.hpp"

#include <algorithm>
#include <cassert>

namespace zflab {

namespace {

std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

void sort_unique(std::vector<HfSet>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

std::span<const HfSet> HfSet::members() const {
  if (!node_) return {};
  return node_->children;
}

HfSet HfSet::from_canonical(std::vector<HfSet> sorted_unique) {
  assert(std::adjacent_find(sorted_unique.begin(), sorted_unique.end(),
                            [](const HfSet& a, const HfSet& b) { return !(a < b); }) ==
         sorted_unique.end());
  HfSet out;
  if (sorted_unique.empty()) return out;
  std::uint32_t rank = 0;
  std::uint64_t h = mix(sorted_unique.size() + 0x51ed27ull);
  for (const auto& c : sorted_unique) {
    rank = std::max(rank, c.rank() + 1);
    h = mix(h ^ c.hash());
  }
  out.node_ = std::make_shared<const Node>(Node{std::move(sorted_unique), rank, h});
  return out;
}

std::strong_ordering canonical_compare(const HfSet& a, const HfSet& b) { return a <=> b; }

std::strong_ordering operator<=>(const HfSet& a, const HfSet& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.rank() <=> b.rank(); c != 0) return c;
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  const auto& ac = a.node_->children;
  const auto& bc = b.node_->children;
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (auto c = ac[i] <=> bc[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

bool operator==(const HfSet& a, const HfSet& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash()) return false;
  return (a <=> b) == 0;
}

bool HfSet::contains(const HfSet& x) const {
  if (!node_ || x.rank() >= node_->rank) return false;
  const auto& c = node_->children;
  auto it = std::lower_bound(c.begin(), c.end(), x);
  return it != c.end() && *it == x;
}

std::string HfSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const auto& c : members()) {
    if (!first) out += ',';
    first = false;
    out += c.to_string();
  }
  out += '}';
  return out;
}

HfSet make_set(std::vector<HfSet> elems) {
  sort_unique(elems);
  return HfSet::from_canonical(std::move(elems));
}

bool is_member(const HfSet& x, const HfSet& a) { return a.contains(x); }

bool is_subset(const HfSet& b, const HfSet& a) {
  auto bm = b.members();
  auto am = a.members();
  return std::includes(am.begin(), am.end(), bm.begin(), bm.end());
}

HfSet set_union(const HfSet& a, const HfSet& b) {
  std::vector<HfSet> out;
  auto am = a.members();
  auto bm = b.members();
  std::set_union(am.begin(), am.end(), bm.begin(), bm.end(), std::back_inserter(out));
  return HfSet::from_canonical(std::move(out));
}

HfSet set_intersection(const HfSet& a, const HfSet& b) {
  std::vector<HfSet> out;
  auto am = a.members();
  auto bm = b.members();
  std::set_intersection(am.begin(), am.end(), bm.begin(), bm.end(), std::back_inserter(out));
  return HfSet::from_canonical(std::move(out));
}

HfSet set_difference(const HfSet& a, const HfSet& b) {
  std::vector<HfSet> out;
  auto am = a.members();
  auto bm = b.members();
  std::set_difference(am.begin(), am.end(), bm.begin(), bm.end(), std::back_inserter(out));
  return HfSet::from_canonical(std::move(out));
}

HfSet union_family(const HfSet& family) {
  std::vector<HfSet> all;
  for (const auto& m : family.members()) {
    auto mm = m.members();
    all.insert(all.end(), mm.begin(), mm.end());
  }
  return make_set(std::move(all));
}

HfSet powerset(const HfSet& a, const Caps& caps) {
  const std::size_t n = a.size();
  if (n > caps.powerset || n >= 63) {
    throw CapExceeded("powerset of a " + std::to_string(n) + "-element set exceeds cap " +
                      std::to_string(caps.powerset));
  }
  const auto elems = a.members();
  std::vector<HfSet> subsets;
  subsets.reserve(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<HfSet> sub;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) sub.push_back(elems[i]);
    }
    subsets.push_back(HfSet::from_canonical(std::move(sub)));
  }
  std::sort(subsets.begin(), subsets.end());
  return HfSet::from_canonical(std::move(subsets));
}

HfSet ordered_pair(const HfSet& x, const HfSet& y) {
  return make_set({singleton(x), make_set({x, y})});
}

bool is_pair(const HfSet& p) {
  try {
    unpair(p);
    return true;
  } catch (const NotAPair&) {
    return false;
  }
}

OrderedPairView unpair(const HfSet& p) {
  // {x} always sorts before {x,y}: its rank is no larger and its cardinality
  // is strictly smaller.
  if (p.size() == 1 && p[0].size() == 1) return {p[0][0], p[0][0]};
  if (p.size() == 2 && p[0].size() == 1 && p[1].size() == 2) {
    const HfSet& x = p[0][0];
    const HfSet& u = p[1][0];
    const HfSet& v = p[1][1];
    if (u == x) return {x, v};
    if (v == x) return {x, u};
  }
  throw NotAPair(p.to_string() + " is not a Kuratowski pair");
}

HfSet cartesian(const HfSet& a, const HfSet& b) {
  std::vector<HfSet> pairs;
  pairs.reserve(a.size() * b.size());
  for (const auto& x : a.members()) {
    for (const auto& y : b.members()) pairs.push_back(ordered_pair(x, y));
  }
  std::sort(pairs.begin(), pairs.end());
  return HfSet::from_canonical(std::move(pairs));
}

HfSet von_neumann(std::size_t n) {
  HfSet cur;
  for (std::size_t i = 0; i < n; ++i) cur = set_union(cur, singleton(cur));
  return cur;
}

std::vector<HfSet> sets_of_rank_at_most(std::uint32_t k) {
  if (k > 4) throw CapExceeded("sets of rank <= " + std::to_string(k) + " are too many");
  HfSet level = powerset(HfSet{});  // rank <= 0
  for (std::uint32_t r = 1; r <= k; ++r) level = powerset(level);
  auto m = level.members();
  return {m.begin(), m.end()};
}

namespace {

class LiteralParser {
 public:
  explicit LiteralParser(std::string_view text) : text_(text) {}

  HfSet parse_all() {
    HfSet s = parse_set();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("trailing input in set literal", pos_);
    return s;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      throw ParseError(std::string("expected '") + c + "' in set literal", pos_);
    }
    ++pos_;
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  HfSet parse_set() {
    expect('{');
    std::vector<HfSet> elems;
    if (!peek('}')) {
      elems.push_back(parse_set());
      while (peek(',')) {
        ++pos_;
        elems.push_back(parse_set());
      }
    }
    expect('}');
    return make_set(std::move(elems));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

HfSet parse_hfs(std::string_view text) { return LiteralParser(text).parse_all(); }

}  // namespace zflab
