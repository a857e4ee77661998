#include "zflab/construction.hpp"

#include <algorithm>
#include <string>

namespace zflab {

std::string_view to_string(U2Variant v) {
  return v == U2Variant::Literal ? "literal" : "union";
}

U2Variant parse_u2_variant(std::string_view text) {
  if (text == "literal") return U2Variant::Literal;
  if (text == "union") return U2Variant::UnionOfProducts;
  throw InvalidArgument("unknown U2 variant '" + std::string(text) + "'");
}

Family::Family(HfSet members) : members_(std::move(members)) {
  if (members_.empty()) throw EmptyFamily("a family must have at least one member");
  union_ = union_family(members_);
}

bool ChoiceFunction::is_valid_for(const Family& f) const {
  std::vector<std::size_t> images(f.size(), 0);
  const auto fam = f.members().members();
  for (const auto& p : graph_.members()) {
    if (!is_pair(p)) return false;
    const auto v = unpair(p);
    auto it = std::lower_bound(fam.begin(), fam.end(), v.first);
    if (it == fam.end() || *it != v.first) return false;
    if (!v.first.contains(v.second)) return false;
    ++images[static_cast<std::size_t>(it - fam.begin())];
  }
  return std::all_of(images.begin(), images.end(), [](std::size_t n) { return n == 1; });
}

HfSet ChoiceFunction::at(const HfSet& a) const {
  std::optional<HfSet> image;
  for (const auto& p : graph_.members()) {
    if (!is_pair(p)) continue;
    auto v = unpair(p);
    if (v.first != a) continue;
    if (image) throw InvalidArgument(a.to_string() + " has more than one image");
    image = v.second;
  }
  if (!image) throw InvalidArgument(a.to_string() + " has no image");
  return *image;
}

HfSet build_PA(const HfSet& a) { return cartesian(singleton(a), a); }

Universes build_universes(const Family& f, const Caps& caps) {
  std::vector<HfSet> all;
  for (const auto& a : f.members().members()) {
    const HfSet square = cartesian(a, a);
    if (square.size() > caps.powerset) {
      throw CapExceeded("U1 needs the power set of a " + std::to_string(square.size()) +
                        "-pair product");
    }
    const HfSet subsets = powerset(square, caps);
    for (const auto& r : subsets.members()) all.push_back(r);
  }
  return {f.union_set(), make_set(std::move(all))};
}

std::size_t U2Base::base_size() const {
  return variant_ == U2Variant::Literal ? literal_.size() : products_.size();
}

U2Base build_U2_base(const Family& f, U2Variant v, const Caps& caps) {
  U2Base out;
  out.variant_ = v;
  std::vector<HfSet> products;
  std::vector<HfSet> literal;
  for (const auto& a : f.members().members()) {
    const HfSet pa = build_PA(a);
    const HfSet square = cartesian(pa, pa);
    for (const auto& p : square.members()) products.push_back(p);
    if (v == U2Variant::Literal) {
      if (square.size() > caps.powerset) {
        throw CapExceeded("literal U2 needs the power set of a " + std::to_string(square.size()) +
                          "-pair product");
      }
      const HfSet subsets = powerset(square, caps);
      for (const auto& q : subsets.members()) literal.push_back(q);
    }
  }
  out.products_ = make_set(std::move(products));
  out.literal_ = make_set(std::move(literal));
  return out;
}

std::vector<Relation> admissible_orders(const HfSet& a, OrderKind kind) {
  auto orders = enumerate_orders(a, kind);
  std::erase_if(orders, [](const Relation& r) { return !relation_properties(r).least; });
  return orders;
}

namespace {

// ((A,x),(A,y)) for every x, y in A, indexed by carrier position.
std::vector<std::vector<HfSet>> lifted_pairs(const HfSet& a) {
  const std::size_t n = a.size();
  std::vector<HfSet> tagged;
  for (const auto& x : a.members()) tagged.push_back(ordered_pair(a, x));
  std::vector<std::vector<HfSet>> table(n, std::vector<HfSet>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) table[i][j] = ordered_pair(tagged[i], tagged[j]);
  }
  return table;
}

// phi1 with the per-member order ranges and lifted pairs computed once.
class Phi1Checker {
 public:
  Phi1Checker(const Family& f, OrderKind kind) {
    for (const auto& a : f.members().members()) {
      members_.push_back({admissible_orders(a, kind), lifted_pairs(a)});
    }
  }

  bool operator()(const HfSet& q) const {
    for (const auto& m : members_) {
      const std::size_t n = m.pairs.size();
      bool some_order = false;
      for (const auto& r : m.orders) {
        bool matches = true;
        for (std::size_t i = 0; i < n && matches; ++i) {
          for (std::size_t j = 0; j < n && matches; ++j) {
            matches = q.contains(m.pairs[i][j]) == r.matrix()(i, j);
          }
        }
        if (matches) {
          some_order = true;
          break;
        }
      }
      if (!some_order) return false;
    }
    return true;
  }

 private:
  struct Member {
    std::vector<Relation> orders;
    std::vector<std::vector<HfSet>> pairs;
  };
  std::vector<Member> members_;
};

}  // namespace

bool phi1_holds(const HfSet& q, const Family& f, OrderKind kind) { return Phi1Checker(f, kind)(q); }

HfSet build_QS(const Family& f, U2Variant v, OrderKind kind, const Caps& caps) {
  if (v == U2Variant::Literal) {
    const U2Base u2 = build_U2_base(f, v, caps);
    const Phi1Checker phi1(f, kind);
    std::vector<HfSet> kept;
    for (const auto& q : u2.literal_members().members()) {
      if (phi1(q)) kept.push_back(q);
    }
    return HfSet::from_canonical(std::move(kept));
  }

  // One lifted order per member; the members' products are disjoint, so the
  // union of a selection is concatenation.
  std::vector<std::vector<HfSet>> factors;
  std::uint64_t total = 1;
  for (const auto& a : f.members().members()) {
    std::vector<HfSet> lifted;
    for (const auto& r : admissible_orders(a, kind)) lifted.push_back(lift_order(r, a).pairs());
    total = lifted.empty() ? 0 : total * lifted.size();
    if (total > caps.product) {
      throw CapExceeded("Q_S product exceeds cap " + std::to_string(caps.product));
    }
    factors.push_back(std::move(lifted));
  }
  if (total == 0) return {};
  std::vector<HfSet> out;
  std::vector<std::size_t> pick(factors.size(), 0);
  while (true) {
    std::vector<HfSet> pairs;
    for (std::size_t k = 0; k < factors.size(); ++k) {
      auto m = factors[k][pick[k]].members();
      pairs.insert(pairs.end(), m.begin(), m.end());
    }
    out.push_back(make_set(std::move(pairs)));
    std::size_t k = 0;
    while (k < factors.size() && ++pick[k] == factors[k].size()) pick[k++] = 0;
    if (k == factors.size()) break;
  }
  return make_set(std::move(out));
}

HfSet build_QS_by_filter(const Family& f, OrderKind kind) {
  const HfSet base = build_U2_base(f, U2Variant::UnionOfProducts).products();
  const std::size_t n = base.size();
  if (n > kQsFilterBase) {
    throw CapExceeded("Q_S filter over a " + std::to_string(n) + "-element base exceeds cap " +
                      std::to_string(kQsFilterBase));
  }
  const Phi1Checker phi1(f, kind);
  std::vector<HfSet> kept;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<HfSet> sub;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) sub.push_back(base[i]);
    }
    HfSet q = HfSet::from_canonical(std::move(sub));
    if (phi1(q)) kept.push_back(std::move(q));
  }
  return make_set(std::move(kept));
}

HfSet restrict_Q(const HfSet& q, const HfSet& a) {
  std::vector<HfSet> kept;
  for (const auto& p : q.members()) {
    if (!is_pair(p)) continue;
    const auto outer = unpair(p);
    if (!is_pair(outer.first) || !is_pair(outer.second)) continue;
    if (unpair(outer.first).first == a && unpair(outer.second).first == a) kept.push_back(p);
  }
  return HfSet::from_canonical(std::move(kept));
}

ChoiceFunction choice_from_Q(const HfSet& q, const Family& f) {
  std::vector<HfSet> graph;
  for (const auto& a : f.members().members()) {
    Relation qa;
    try {
      qa = Relation::over(build_PA(a), restrict_Q(q, a));
    } catch (const PairOutOfCarrier& e) {
      throw NoLeast(std::string("restriction is not an order on P_A: ") + e.what());
    }
    graph.push_back(ordered_pair(a, least_element(project_order(qa, a))));
  }
  return ChoiceFunction(make_set(std::move(graph)));
}

HfSet build_Fc_from_QS(const HfSet& q_s, const Family& f) {
  std::vector<HfSet> graphs;
  for (const auto& q : q_s.members()) graphs.push_back(choice_from_Q(q, f).graph());
  return make_set(std::move(graphs));
}

HfSet build_Fc(const Family& f, U2Variant v, OrderKind kind, const Caps& caps) {
  return build_Fc_from_QS(build_QS(f, v, kind, caps), f);
}

HfSet build_Fc_by_separation(const Family& f, const HfSet& q_s, PhiCReading reading,
                             const Caps& caps) {
  const auto fam = f.members().members();
  const auto uni = f.union_set().members();
  const std::size_t cells = fam.size() * uni.size();
  if (cells > caps.powerset || cells >= 63) {
    throw CapExceeded("phi_c separation over 2^" + std::to_string(cells) + " subsets exceeds cap");
  }
  // Cell c = (A_i, u_j) with c = i * |A_U| + j.
  std::uint64_t selective = 0;
  std::vector<HfSet> cell_pair(cells);
  struct Inner {
    std::size_t cell;
    std::vector<HfSet> required;  // ((A,m),(A,b)) for each b in A
  };
  std::vector<Inner> inner;
  for (std::size_t i = 0; i < fam.size(); ++i) {
    const HfSet& a = fam[i];
    for (std::size_t j = 0; j < uni.size(); ++j) {
      const std::size_t c = i * uni.size() + j;
      cell_pair[c] = ordered_pair(a, uni[j]);
      if (!a.contains(uni[j])) continue;
      selective |= std::uint64_t{1} << c;
      Inner in{c, {}};
      for (const auto& b : a.members()) {
        in.required.push_back(ordered_pair(cell_pair[c], ordered_pair(a, b)));
      }
      inner.push_back(std::move(in));
    }
  }

  // The right-hand side of the biconditional depends only on (Q, A, m); it is
  // evaluated once per Q rather than once per candidate f.
  std::vector<std::uint64_t> least_cells;
  for (const auto& q : q_s.members()) {
    std::uint64_t mask = 0;
    for (const auto& in : inner) {
      const bool all = std::all_of(in.required.begin(), in.required.end(),
                                   [&](const HfSet& p) { return q.contains(p); });
      if (all) mask |= std::uint64_t{1} << in.cell;
    }
    least_cells.push_back(mask);
  }
  std::sort(least_cells.begin(), least_cells.end());

  std::vector<HfSet> graphs;
  for (std::uint64_t fmask = 0; fmask < (std::uint64_t{1} << cells); ++fmask) {
    if (reading == PhiCReading::Selective && (fmask & ~selective)) continue;
    if (!std::binary_search(least_cells.begin(), least_cells.end(), fmask & selective)) continue;
    std::vector<HfSet> pairs;
    for (std::size_t c = 0; c < cells; ++c) {
      if (fmask >> c & 1) pairs.push_back(cell_pair[c]);
    }
    graphs.push_back(make_set(std::move(pairs)));
  }
  return make_set(std::move(graphs));
}

Formula phi_c_formula(PhiCReading reading) {
  const std::string verbatim =
      "exists Q in QS . forall A in AS . forall m in A . "
      "((A, m) in f <-> (forall b in A . ((A, m), (A, b)) in Q))";
  if (reading == PhiCReading::Verbatim) return parse_formula(verbatim);
  return parse_formula("(" + verbatim +
                       ") & (forall p in f . exists A in AS . exists m in A . p = (A, m))");
}

Relation theorem4_order_from_choice(const HfSet& a, const ChoiceFunction& f) {
  const HfSet chosen = f.at(a);
  BoolMatrix m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) m.set(i, j, i == j || a[i] == chosen);
  }
  return Relation::from_matrix(a, m);
}

bool phi3_holds(const Relation& r, const HfSet& a, const ChoiceFunction& f) {
  static const Formula phi3 =
      parse_formula("forall a in A . forall b in A . ((a, b) in R <-> a = b | (A, a) in f)");
  return eval_formula(phi3, Env{{"A", a}, {"R", r.pairs()}, {"f", f.graph()}});
}

PipelineReport run_pipeline(const Family& f, U2Variant v, OrderKind kind, const Caps& caps) {
  PipelineReport rep;
  rep.variant = v;
  rep.kind = kind;
  rep.family = f.members().to_string();
  rep.has_empty_member = f.has_empty_member();
  rep.a_u_size = f.union_set().size();

  try {
    rep.u1_size = build_universes(f, caps).u1.size();
  } catch (const CapExceeded&) {
    rep.capped_steps.push_back("U1");
  }
  try {
    rep.u2_base_size = build_U2_base(f, v, caps).base_size();
  } catch (const CapExceeded&) {
    rep.capped_steps.push_back("U2");
  }

  const HfSet q_s = build_QS(f, v, kind, caps);
  rep.q_s_size = q_s.size();
  rep.q_s_empty = q_s.empty();

  if (v == U2Variant::UnionOfProducts) {
    if (build_U2_base(f, v, caps).products().size() <= kQsFilterBase) {
      rep.q_s_filter_agrees = build_QS_by_filter(f, kind) == q_s;
    } else {
      rep.capped_steps.push_back("QS filter cross-check");
    }
  }

  const HfSet f_c = build_Fc_from_QS(q_s, f);
  rep.f_c_size = f_c.size();
  for (const auto& g : f_c.members()) {
    if (!ChoiceFunction(g).is_valid_for(f)) rep.f_c_all_valid = false;
  }
  for (std::size_t i = 0; i < f_c.size() && i < 3; ++i) rep.witnesses.push_back(f_c[i].to_string());

  if (f.size() * f.union_set().size() <= caps.powerset) {
    rep.f_c_routes_agree = build_Fc_by_separation(f, q_s, PhiCReading::Selective, caps) == f_c;
    rep.f_c_verbatim_size = build_Fc_by_separation(f, q_s, PhiCReading::Verbatim, caps).size();
  } else {
    rep.capped_steps.push_back("Fc separation");
  }
  return rep;
}

}  // namespace zflab
