#pragma once

// Hereditarily finite sets.
//
// An HfSet is an immutable value. Its members are kept deduplicated and sorted
// under canonical_compare, so two sets are extensionally equal exactly when
// their member sequences are identical. Nodes are shared between copies; that
// sharing is never observable.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zflab/errors.hpp"

namespace zflab {

// Enumeration limits. `powerset` bounds the cardinality of any set whose power
// set is materialized; `product` bounds product-space enumerations.
struct Caps {
  std::size_t powerset = 20;
  std::uint64_t product = 1'000'000;
};

class HfSet {
 public:
  HfSet() = default;  // the empty set

  // Members in canonical order.
  std::span<const HfSet> members() const;
  std::size_t size() const { return node_ ? node_->children.size() : 0; }
  bool empty() const { return node_ == nullptr; }
  std::uint32_t rank() const { return node_ ? node_->rank : 0; }
  std::size_t hash() const { return node_ ? node_->hash : kEmptyHash; }

  bool contains(const HfSet& x) const;
  const HfSet& operator[](std::size_t i) const { return node_->children[i]; }

  // Canonical literal, e.g. "{{},{{}}}".
  std::string to_string() const;

  friend bool operator==(const HfSet& a, const HfSet& b);
  friend std::strong_ordering operator<=>(const HfSet& a, const HfSet& b);

  // Builds from members already sorted and deduplicated. Checked in debug
  // builds only; callers are kernel-internal fast paths.
  static HfSet from_canonical(std::vector<HfSet> sorted_unique);

 private:
  struct Node {
    std::vector<HfSet> children;
    std::uint32_t rank;
    std::size_t hash;
  };
  static constexpr std::size_t kEmptyHash = 0x9e3779b97f4a7c15ull;

  std::shared_ptr<const Node> node_;
};

// Total order: rank, then cardinality, then lexicographic on members.
std::strong_ordering canonical_compare(const HfSet& a, const HfSet& b);

HfSet make_set(std::vector<HfSet> elems);
inline HfSet singleton(const HfSet& x) { return HfSet::from_canonical({x}); }

bool is_member(const HfSet& x, const HfSet& a);
bool is_subset(const HfSet& b, const HfSet& a);

HfSet set_union(const HfSet& a, const HfSet& b);
HfSet set_intersection(const HfSet& a, const HfSet& b);
HfSet set_difference(const HfSet& a, const HfSet& b);

// Union of the members of `family`.
HfSet union_family(const HfSet& family);

// Throws CapExceeded if |a| > caps.powerset.
HfSet powerset(const HfSet& a, const Caps& caps = {});

// Kuratowski encoding {{x},{x,y}}.
HfSet ordered_pair(const HfSet& x, const HfSet& y);

struct OrderedPairView {
  HfSet first;
  HfSet second;
  friend bool operator==(const OrderedPairView&, const OrderedPairView&) = default;
};

OrderedPairView unpair(const HfSet& p);  // throws NotAPair
bool is_pair(const HfSet& p);

HfSet cartesian(const HfSet& a, const HfSet& b);

// von Neumann natural: 0 = {}, n+1 = n ∪ {n}.
HfSet von_neumann(std::size_t n);

// All sets of rank <= k, canonically ordered (there are 1, 2, 4, 16, 65536).
std::vector<HfSet> sets_of_rank_at_most(std::uint32_t k);

// Parses the literal grammar `set := '{' (set (',' set)*)? '}'`; whitespace is
// insignificant. Throws ParseError.
HfSet parse_hfs(std::string_view text);

}  // namespace zflab

template <>
struct std::hash<zflab::HfSet> {
  std::size_t operator()(const zflab::HfSet& s) const noexcept { return s.hash(); }
};
