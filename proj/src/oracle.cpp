#include "zflab/oracle.hpp"

#include <vector>

namespace zflab::oracle {

namespace {

constexpr std::size_t kMaxCarrier = 4;

// Clause checks over any `rel(i, j)` view of a relation on {0..n-1}.
template <class Rel>
bool has_kind(std::size_t n, OrderKind kind, const Rel& rel) {
  auto universal = [&](std::size_t m) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!rel(m, b)) return false;
    }
    return true;
  };
  auto antisymmetric = [&] {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (x != y && rel(x, y) && rel(y, x)) return false;
      }
    }
    return true;
  };
  auto transitive = [&] {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (!rel(x, y)) continue;
        for (std::size_t z = 0; z < n; ++z) {
          if (rel(y, z) && !rel(x, z)) return false;
        }
      }
    }
    return true;
  };

  switch (kind) {
    case OrderKind::WellOrder: {
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          if (!rel(x, y) && !rel(y, x)) return false;
        }
      }
      if (!antisymmetric() || !transitive()) return false;
      for (std::uint64_t sub = 1; sub < (std::uint64_t{1} << n); ++sub) {
        bool found = false;
        for (std::size_t m = 0; m < n && !found; ++m) {
          if (!(sub >> m & 1)) continue;
          bool least = true;
          for (std::size_t b = 0; b < n && least; ++b) {
            if (sub >> b & 1) least = rel(m, b);
          }
          found = least;
        }
        if (!found) return false;
      }
      return true;
    }
    case OrderKind::PartialOrderWithLeast: {
      for (std::size_t x = 0; x < n; ++x) {
        if (!rel(x, x)) return false;
      }
      if (!antisymmetric() || !transitive()) return false;
      if (n == 0) return true;
      for (std::size_t m = 0; m < n; ++m) {
        if (universal(m)) return true;
      }
      return false;
    }
    case OrderKind::UniqueUniversal: {
      std::size_t count = 0;
      for (std::size_t m = 0; m < n; ++m) count += universal(m);
      return count == 1;
    }
  }
  return false;
}

void require_small(std::size_t n) {
  if (n > kMaxCarrier) {
    throw CapExceeded("oracle order search over " + std::to_string(n) + " elements exceeds cap " +
                      std::to_string(kMaxCarrier));
  }
}

}  // namespace

HfSet enumerate_choice_functions(const HfSet& family, const Caps& caps) {
  std::uint64_t total = 1;
  for (const auto& a : family.members()) {
    total *= a.size();
    if (total > caps.product) {
      throw CapExceeded("choice-function product exceeds cap " + std::to_string(caps.product));
    }
  }
  if (total == 0 || family.empty()) return {};

  const auto fam = family.members();
  std::vector<std::size_t> pick(fam.size(), 0);
  std::vector<HfSet> graphs;
  while (true) {
    std::vector<HfSet> graph;
    for (std::size_t k = 0; k < fam.size(); ++k) graph.push_back(ordered_pair(fam[k], fam[k][pick[k]]));
    graphs.push_back(make_set(std::move(graph)));
    std::size_t k = 0;
    while (k < fam.size() && ++pick[k] == fam[k].size()) pick[k++] = 0;
    if (k == fam.size()) break;
  }
  return make_set(std::move(graphs));
}

std::uint64_t count_orders(std::size_t n, OrderKind kind) {
  require_small(n);
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * n)); ++mask) {
    count += has_kind(n, kind, [&](std::size_t i, std::size_t j) { return (mask >> (i * n + j)) & 1; });
  }
  return count;
}

std::uint64_t count_orders_on(const HfSet& carrier, OrderKind kind) {
  const std::size_t n = carrier.size();
  require_small(n);
  std::vector<HfSet> pair(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) pair[i * n + j] = ordered_pair(carrier[i], carrier[j]);
  }
  std::uint64_t count = 0;
  const HfSet relations = powerset(cartesian(carrier, carrier), Caps{n * n, 0});
  for (const auto& r : relations.members()) {
    count += has_kind(n, kind, [&](std::size_t i, std::size_t j) { return r.contains(pair[i * n + j]); });
  }
  return count;
}

bool admits_pol(const HfSet& a) {
  // The least element is a witness m ∈ A, so ∅ never qualifies.
  if (a.empty()) return false;
  const std::size_t n = a.size();
  require_small(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * n)); ++mask) {
    if (has_kind(n, OrderKind::PartialOrderWithLeast,
                 [&](std::size_t i, std::size_t j) { return (mask >> (i * n + j)) & 1; })) {
      return true;
    }
  }
  return false;
}

EquivalenceVerdict verify_equivalence(const HfSet& family, const Caps& caps) {
  EquivalenceVerdict v;
  v.fingerprint = family.to_string();
  v.has_choice = !enumerate_choice_functions(family, caps).empty();
  v.all_members_have_pol = true;
  for (const auto& a : family.members()) {
    if (a.empty() || !admits_pol(a)) v.all_members_have_pol = false;
  }
  v.agree = v.has_choice == v.all_members_have_pol;
  return v;
}

}  // namespace zflab::oracle
