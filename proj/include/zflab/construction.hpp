#pragma once

// The two-stage separation pipeline that produces choice functions from
// per-member orders, and the converse construction of an order from a choice
// function.
//
// Stage one separates Q_S, the combined orders: sets Q of pairs
// ((A,a),(A,b)) whose restriction to each member A is the lift of an order
// on A. Stage two separates F_c, the graphs {(A, m)} where m is least in the
// order Q induces on A.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zflab/formula.hpp"
#include "zflab/hfs.hpp"
#include "zflab/orders.hpp"

namespace zflab {

// Where Q_S is separated from.
//   Literal:          ⋃_A 𝒫(P_A × P_A); every candidate concerns one member only.
//   UnionOfProducts:  𝒫(⋃_A (P_A × P_A)); candidates may span all members.
enum class U2Variant { Literal, UnionOfProducts };

std::string_view to_string(U2Variant v);           // "literal" | "union"
U2Variant parse_u2_variant(std::string_view text);  // throws InvalidArgument

class Family {
 public:
  explicit Family(HfSet members);  // throws EmptyFamily on ∅

  const HfSet& members() const { return members_; }
  const HfSet& union_set() const { return union_; }
  std::size_t size() const { return members_.size(); }
  bool has_empty_member() const { return members_.size() > 0 && members_[0].empty(); }

 private:
  HfSet members_;
  HfSet union_;
};

class ChoiceFunction {
 public:
  explicit ChoiceFunction(HfSet graph) : graph_(std::move(graph)) {}

  const HfSet& graph() const { return graph_; }

  // Every member of the family has exactly one image, the image lies in the
  // member, and the graph has no other pairs.
  bool is_valid_for(const Family& f) const;
  // Throws InvalidArgument unless `a` has exactly one image.
  HfSet at(const HfSet& a) const;

  friend bool operator==(const ChoiceFunction&, const ChoiceFunction&) = default;

 private:
  HfSet graph_;
};

// P_A = {A} × A.
HfSet build_PA(const HfSet& a);

struct Universes {
  HfSet union_set;  // A_U
  HfSet u1;         // ⋃_A 𝒫(A × A)
};

// Throws CapExceeded when some |A × A| exceeds caps.powerset.
Universes build_universes(const Family& f, const Caps& caps = {});

class U2Base {
 public:
  U2Variant variant() const { return variant_; }
  // ⋃_A (P_A × P_A), for both variants.
  const HfSet& products() const { return products_; }
  // Literal only: the materialized union of power sets.
  const HfSet& literal_members() const { return literal_; }
  // Literal: |U₂|. UnionOfProducts: |⋃_A (P_A × P_A)|, whose power set is U₂.
  std::size_t base_size() const;

 private:
  friend U2Base build_U2_base(const Family&, U2Variant, const Caps&);
  U2Variant variant_ = U2Variant::Literal;
  HfSet products_;
  HfSet literal_;
};

// Literal throws CapExceeded when some |P_A × P_A| exceeds caps.powerset. The
// UnionOfProducts power set is never materialized.
U2Base build_U2_base(const Family& f, U2Variant v, const Caps& caps = {});

// Orders of `kind` on A that have a least element; this is the range of the
// existential over R_A. Empty for A = ∅.
std::vector<Relation> admissible_orders(const HfSet& a, OrderKind kind);

// ∀A ∈ A_S ∃R_A ∀a,b ∈ A [((A,a),(A,b)) ∈ Q ⟺ a R_A b].
bool phi1_holds(const HfSet& q, const Family& f, OrderKind kind);

// Literal: separation of the materialized U₂ by phi1. UnionOfProducts: the
// product of lifted admissible orders, one per member. Throws CapExceeded.
HfSet build_QS(const Family& f, U2Variant v, OrderKind kind, const Caps& caps = {});

// Separation of 𝒫(⋃_A (P_A × P_A)) by phi1, for cross-checking the product
// route. Throws CapExceeded above kQsFilterBase base elements.
HfSet build_QS_by_filter(const Family& f, OrderKind kind);
inline constexpr std::size_t kQsFilterBase = 12;

// Q ∩ (P_A × P_A).
HfSet restrict_Q(const HfSet& q, const HfSet& a);

// A ↦ least element of the order Q induces on A. Throws NoLeast.
ChoiceFunction choice_from_Q(const HfSet& q, const Family& f);

// {choice_from_Q(Q) | Q ∈ Q_S} as a set of graphs.
HfSet build_Fc(const Family& f, U2Variant v, OrderKind kind, const Caps& caps = {});
HfSet build_Fc_from_QS(const HfSet& q_s, const Family& f);

// How the second separation treats pairs (A, x) with x ∈ A_U \ A.
//   Verbatim:  unconstrained, exactly as the quantifier ∀m ∈ A leaves them.
//   Selective: forbidden, so that F_c only holds graphs of pairs (A, m) with m ∈ A.
enum class PhiCReading { Verbatim, Selective };

// F_c by separating 𝒫(A_S × A_U) with
//   φ_c(f) = ∃Q ∈ Q_S ∀A ∈ A_S ∀m ∈ A [(A,m) ∈ f ⟺ ∀b ∈ A ((A,m),(A,b)) ∈ Q].
// Throws CapExceeded when |A_S × A_U| exceeds caps.powerset.
HfSet build_Fc_by_separation(const Family& f, const HfSet& q_s,
                             PhiCReading reading = PhiCReading::Selective, const Caps& caps = {});

// φ_c as a formula with free variables f, QS and AS, for evaluation by the
// generic separation at small sizes.
Formula phi_c_formula(PhiCReading reading);

// id_A ∪ {(f(A), b) | b ∈ A}.
Relation theorem4_order_from_choice(const HfSet& a, const ChoiceFunction& f);

// φ₃(R, A, f) = ∀a,b ∈ A [(a,b) ∈ R ⟺ a = b ∨ a = f(A)].
bool phi3_holds(const Relation& r, const HfSet& a, const ChoiceFunction& f);

struct PipelineReport {
  U2Variant variant = U2Variant::UnionOfProducts;
  OrderKind kind = OrderKind::WellOrder;
  std::string family;
  bool has_empty_member = false;
  std::size_t a_u_size = 0;
  std::optional<std::size_t> u1_size;       // absent when the step hit the cap
  std::optional<std::size_t> u2_base_size;  // absent when the step hit the cap
  std::size_t q_s_size = 0;
  std::size_t f_c_size = 0;
  bool q_s_empty = true;
  bool f_c_all_valid = true;
  std::optional<bool> q_s_filter_agrees;  // UnionOfProducts with a small base
  std::optional<bool> f_c_routes_agree;   // when the φ_c separation is feasible
  std::optional<std::size_t> f_c_verbatim_size;
  std::vector<std::string> capped_steps;
  std::vector<std::string> witnesses;  // up to three members of F_c
};

// Runs every stage and records emptiness and validity as observed. Steps that
// only feed the report (U₁, the U₂ count, cross-checks) are skipped and named
// in capped_steps when over the caps; Q_S and F_c throw CapExceeded instead.
PipelineReport run_pipeline(const Family& f, U2Variant v, OrderKind kind, const Caps& caps = {});

}  // namespace zflab
