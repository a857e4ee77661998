#pragma once

// Relations over a finite carrier and the three order properties the choice
// construction can run on.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "zflab/formula.hpp"
#include "zflab/hfs.hpp"
#include "zflab/order_kind.hpp"

namespace zflab {

// Square boolean matrix over carrier indices. Row i, column j means i R j.
class BoolMatrix {
 public:
  BoolMatrix() = default;
  explicit BoolMatrix(std::size_t n) : n_(n), bits_(n * n, false) {}
  // Row-major bit mask; bit i*n+j set means i R j. Requires n*n <= 64.
  static BoolMatrix from_mask(std::size_t n, std::uint64_t mask);

  std::size_t size() const { return n_; }
  bool operator()(std::size_t i, std::size_t j) const { return bits_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, bool v = true) { bits_[i * n_ + j] = v; }

  friend bool operator==(const BoolMatrix&, const BoolMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<bool> bits_;
};

// Clause-level results over a bare matrix; `least` is a carrier index.
struct MatrixProperties {
  bool reflexive = false;
  bool antisymmetric = false;
  bool transitive = false;
  bool total = false;
  std::optional<std::size_t> least;
};

MatrixProperties matrix_properties(const BoolMatrix& m);

class Relation {
 public:
  Relation() = default;

  // Throws PairOutOfCarrier if some member of `pairs` is not a pair over `carrier`.
  static Relation over(const HfSet& carrier, const HfSet& pairs);
  static Relation from_matrix(const HfSet& carrier, const BoolMatrix& matrix);

  const HfSet& carrier() const { return carrier_; }
  const HfSet& pairs() const { return pairs_; }
  const BoolMatrix& matrix() const { return matrix_; }
  std::size_t size() const { return carrier_.size(); }

  const HfSet& element(std::size_t i) const { return carrier_[i]; }
  std::optional<std::size_t> index_of(const HfSet& x) const;
  bool relates(const HfSet& x, const HfSet& y) const;

  friend bool operator==(const Relation& a, const Relation& b) {
    return a.carrier_ == b.carrier_ && a.pairs_ == b.pairs_;
  }

 private:
  HfSet carrier_;
  HfSet pairs_;
  BoolMatrix matrix_;
};

Relation identity_relation(const HfSet& carrier);

struct PropertyReport {
  bool reflexive = false;
  bool antisymmetric = false;
  bool transitive = false;
  bool total = false;
  std::optional<HfSet> least;  // the unique m with m R b for all b, if any
};

PropertyReport relation_properties(const Relation& r);

// Uses the clause checks plus, for WellOrder, the finite shortcut that a
// total antisymmetric transitive relation on a finite set has least elements
// in every nonempty subset. well_order_literal checks that clause directly.
bool satisfies(const Relation& r, OrderKind kind);
bool well_order_literal(const Relation& r, const Caps& caps = {});

// Throws NoLeast unless exactly one element relates to every element.
HfSet least_element(const Relation& r);

// R = {(x1,x2) ∈ A×A | x1 = x2 ∨ φ(A, x1)}, evaluating φ with `var` bound to
// x1 and "A" bound to the carrier. Throws NotUniquelySatisfied unless φ holds
// at exactly one element.
Relation order_from_formula(const HfSet& carrier, const Formula& phi, const Env& env = {},
                            std::string_view var = "x");

enum class OrderEnumeration {
  Auto,        // permutations for WellOrder, subset filter otherwise
  BruteForce,  // filter all 2^(n²) relations
};

// Relations over `carrier` satisfying `kind`, ordered canonically by their
// pair sets. Throws CapExceeded above four elements.
std::vector<Relation> enumerate_orders(const HfSet& carrier, OrderKind kind,
                                       OrderEnumeration how = OrderEnumeration::Auto);
inline constexpr std::size_t kMaxEnumeratedCarrier = 4;

// Orders over A transported to P_A = {A} × A and back.
Relation lift_order(const Relation& r, const HfSet& a);
Relation project_order(const Relation& q, const HfSet& a);  // throws NotLiftShaped

}  // namespace zflab
