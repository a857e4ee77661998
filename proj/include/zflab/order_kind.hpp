#pragma once

// Vocabulary shared by the order checker and the independent oracle.

#include <string>
#include <string_view>

#include "zflab/errors.hpp"

namespace zflab {

enum class OrderKind {
  WellOrder,              // total, antisymmetric, transitive, every nonempty subset has a least
  PartialOrderWithLeast,  // reflexive, antisymmetric, transitive, and a least element if nonempty
  UniqueUniversal,        // exactly one m with m R b for every b
};

inline constexpr OrderKind kAllOrderKinds[] = {
    OrderKind::WellOrder, OrderKind::PartialOrderWithLeast, OrderKind::UniqueUniversal};

// "wellorder" | "pol" | "unique-universal"
inline std::string_view to_string(OrderKind kind) {
  switch (kind) {
    case OrderKind::WellOrder:
      return "wellorder";
    case OrderKind::PartialOrderWithLeast:
      return "pol";
    case OrderKind::UniqueUniversal:
      return "unique-universal";
  }
  return "?";
}

inline OrderKind parse_order_kind(std::string_view text) {
  for (auto k : kAllOrderKinds) {
    if (to_string(k) == text) return k;
  }
  throw InvalidArgument("unknown order kind '" + std::string(text) + "'");
}

}  // namespace zflab
