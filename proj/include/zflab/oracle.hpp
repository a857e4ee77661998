#pragma once

// Brute-force ground truth. Depends on the kernel only: nothing here goes
// through the formula evaluator, the order checker or the construction, so
// agreement with them is independent evidence.

#include <cstddef>
#include <cstdint>
#include <string>

#include "zflab/hfs.hpp"
#include "zflab/order_kind.hpp"

namespace zflab::oracle {

// Every graph {(A, a_A) | A ∈ family} with a_A ∈ A; there are ∏|A| of them.
// Throws CapExceeded when that product exceeds caps.product.
HfSet enumerate_choice_functions(const HfSet& family, const Caps& caps = {});

// Relations of `kind` on an n-element set, counted over all 2^(n²) bit
// matrices. Well-orders are checked with the subset clause spelled out.
// Throws CapExceeded for n > 4.
std::uint64_t count_orders(std::size_t n, OrderKind kind);

// Same count, but over the pair sets in 𝒫(A × A) of a concrete carrier.
std::uint64_t count_orders_on(const HfSet& carrier, OrderKind kind);

// Some reflexive, antisymmetric, transitive relation on A has a least element
// m ∈ A. False for ∅.
bool admits_pol(const HfSet& a);

struct EquivalenceVerdict {
  std::string fingerprint;  // canonical literal of the family
  bool has_choice = false;
  bool all_members_have_pol = false;
  bool agree = false;
};

// has_choice: a choice function exists. all_members_have_pol: every member is
// nonempty and admits a partial order with a least element.
EquivalenceVerdict verify_equivalence(const HfSet& family, const Caps& caps = {});

}  // namespace zflab::oracle
