#include <gtest/gtest.h>

#include "corpus.hpp"
#include "zflab/construction.hpp"
#include "zflab/oracle.hpp"

using namespace zflab;

namespace {

HfSet S(const char* text) { return parse_hfs(text); }

const HfSet kEmpty;
const HfSet kOne = singleton(kEmpty);           // {∅}
const HfSet kTwo = make_set({kEmpty, kOne});    // {∅,{∅}}
const HfSet kOneOne = singleton(kOne);          // {{∅}}

Family F(std::vector<HfSet> members) { return Family(make_set(std::move(members))); }

// F_c through the generic evaluator on the φ_c formula.
HfSet fc_by_formula(const Family& f, const HfSet& q_s, PhiCReading reading) {
  const HfSet space = powerset(cartesian(f.members(), f.union_set()));
  return separation(space, "f", phi_c_formula(reading), {{"QS", q_s}, {"AS", f.members()}});
}

}  // namespace

TEST(Family, Rejects) {
  EXPECT_THROW(Family(HfSet{}), EmptyFamily);
  EXPECT_TRUE(F({kEmpty, kOne}).has_empty_member());
  EXPECT_FALSE(F({kOne}).has_empty_member());
}

TEST(U2Variant, Names) {
  EXPECT_EQ(parse_u2_variant("literal"), U2Variant::Literal);
  EXPECT_EQ(parse_u2_variant("union"), U2Variant::UnionOfProducts);
  EXPECT_EQ(to_string(U2Variant::Literal), "literal");
  EXPECT_THROW(parse_u2_variant("both"), InvalidArgument);
}

TEST(PA, Examples) {
  EXPECT_TRUE(build_PA(kEmpty).empty());
  EXPECT_EQ(build_PA(kOne), singleton(ordered_pair(kOne, kEmpty)));
  const HfSet a = von_neumann(3);
  const HfSet pa = build_PA(a);
  EXPECT_EQ(pa.size(), 3u);
  for (const auto& p : pa.members()) EXPECT_EQ(unpair(p).first, a);
}

TEST(Universes, Examples) {
  const auto u = build_universes(F({kOne}));
  EXPECT_EQ(u.union_set, kOne);
  EXPECT_EQ(u.u1.size(), 2u);
  EXPECT_EQ(build_universes(F({kOne, kOneOne})).union_set, kTwo);
  // Disjoint members of sizes 1 and 2 share only ∅ among their relations.
  EXPECT_EQ(build_universes(F({kOne, S("{{{}},{{{}}}}")})).u1.size(), 17u);
  // Overlapping members share more: {(∅,∅)} is a relation on both.
  EXPECT_EQ(build_universes(F({kOne, kTwo})).u1.size(), 16u);
  EXPECT_THROW(build_universes(F({von_neumann(3)}), Caps{8, 100}), CapExceeded);
}

TEST(U2, Examples) {
  const Family single = F({kOne});
  EXPECT_EQ(build_U2_base(single, U2Variant::Literal).base_size(), 2u);
  EXPECT_EQ(build_U2_base(single, U2Variant::UnionOfProducts).base_size(), 1u);  // 2^1 subsets
  const Family twos = F({kTwo, S("{{{}},{{{}}}}")});
  EXPECT_EQ(build_U2_base(twos, U2Variant::Literal).base_size(), 31u);
  EXPECT_EQ(build_U2_base(twos, U2Variant::UnionOfProducts).base_size(), 8u);
}

TEST(Phi1, Examples) {
  const HfSet a = kTwo;
  const Family single = F({a});
  const auto orders = enumerate_orders(a, OrderKind::WellOrder);
  EXPECT_TRUE(phi1_holds(lift_order(orders[0], a).pairs(), single, OrderKind::WellOrder));
  EXPECT_FALSE(phi1_holds(HfSet{}, single, OrderKind::WellOrder));
  const HfSet b = S("{{{}},{{{}}}}");
  const Family two = F({a, b});
  const HfSet q = set_union(lift_order(orders[1], a).pairs(),
                            lift_order(enumerate_orders(b, OrderKind::WellOrder)[0], b).pairs());
  EXPECT_TRUE(phi1_holds(q, two, OrderKind::WellOrder));
}

TEST(QS, Examples) {
  const Family single = F({kTwo});
  EXPECT_EQ(build_QS(single, U2Variant::Literal, OrderKind::WellOrder).size(), 2u);
  EXPECT_EQ(build_QS(single, U2Variant::UnionOfProducts, OrderKind::WellOrder).size(), 2u);
  const Family twos = F({kTwo, S("{{{}},{{{}}}}")});
  EXPECT_TRUE(build_QS(twos, U2Variant::Literal, OrderKind::WellOrder).empty());
  const HfSet q_s = build_QS(twos, U2Variant::UnionOfProducts, OrderKind::WellOrder);
  EXPECT_EQ(q_s.size(), 4u);
  EXPECT_EQ(q_s, build_QS_by_filter(twos, OrderKind::WellOrder));
}

TEST(QS, Cap) {
  const Family f = F({von_neumann(3), S("{{{}},{{{}}},{{{{}}}}}")});
  EXPECT_THROW(build_QS(f, U2Variant::UnionOfProducts, OrderKind::WellOrder, Caps{20, 35}),
               CapExceeded);
  EXPECT_EQ(build_QS(f, U2Variant::UnionOfProducts, OrderKind::WellOrder, Caps{20, 36}).size(), 36u);
}

TEST(QS, EmptyMemberGivesNothing) {
  for (auto v : {U2Variant::Literal, U2Variant::UnionOfProducts}) {
    for (auto k : kAllOrderKinds) {
      const Family f = F({kEmpty, kTwo});
      EXPECT_TRUE(build_QS(f, v, k).empty());
      EXPECT_TRUE(build_Fc(f, v, k).empty());
    }
  }
}

TEST(QS, FilterAgreesAcrossKinds) {
  for (const auto& fam : {F({kTwo}), F({kOne, kTwo}), F({kTwo, S("{{{}},{{{}}}}")}),
                          F({kOne, kOneOne, S("{{},{{{}}}}")})}) {
    for (auto k : kAllOrderKinds) {
      EXPECT_EQ(build_QS(fam, U2Variant::UnionOfProducts, k), build_QS_by_filter(fam, k))
          << fam.members().to_string();
    }
  }
}

TEST(RestrictQ, PicksMember) {
  const HfSet a = kTwo;
  const HfSet b = S("{{{}},{{{}}}}");
  const Relation ra = enumerate_orders(a, OrderKind::WellOrder)[1];
  const Relation rb = enumerate_orders(b, OrderKind::WellOrder)[0];
  const HfSet q = set_union(lift_order(ra, a).pairs(), lift_order(rb, b).pairs());
  EXPECT_EQ(restrict_Q(q, a), lift_order(ra, a).pairs());
  EXPECT_EQ(restrict_Q(q, b), lift_order(rb, b).pairs());
}

TEST(ChoiceFromQ, LeastOfOrder) {
  const HfSet a = kTwo;
  const Family f = F({a});
  for (const auto& r : enumerate_orders(a, OrderKind::WellOrder)) {
    const ChoiceFunction c = choice_from_Q(lift_order(r, a).pairs(), f);
    EXPECT_EQ(c.at(a), least_element(r));
    EXPECT_TRUE(c.is_valid_for(f));
  }
  EXPECT_THROW(choice_from_Q(HfSet{}, f), NoLeast);
}

TEST(ChoiceFunction, Validity) {
  const Family f = F({kOne, kTwo});
  EXPECT_TRUE(ChoiceFunction(make_set({ordered_pair(kOne, kEmpty), ordered_pair(kTwo, kOne)})).is_valid_for(f));
  // Image outside the member.
  EXPECT_FALSE(ChoiceFunction(make_set({ordered_pair(kOne, kOne), ordered_pair(kTwo, kOne)})).is_valid_for(f));
  // Missing member.
  EXPECT_FALSE(ChoiceFunction(make_set({ordered_pair(kOne, kEmpty)})).is_valid_for(f));
  // Two images.
  EXPECT_FALSE(ChoiceFunction(make_set({ordered_pair(kOne, kEmpty), ordered_pair(kTwo, kOne),
                                        ordered_pair(kTwo, kEmpty)}))
                   .is_valid_for(f));
  // Not a pair.
  EXPECT_FALSE(ChoiceFunction(make_set({ordered_pair(kOne, kEmpty), ordered_pair(kTwo, kOne), kTwo}))
                   .is_valid_for(f));
  EXPECT_THROW(ChoiceFunction(make_set({ordered_pair(kOne, kEmpty)})).at(kTwo), InvalidArgument);
}

TEST(Fc, Examples) {
  EXPECT_EQ(build_Fc(F({kOne}), U2Variant::UnionOfProducts, OrderKind::WellOrder),
            singleton(singleton(ordered_pair(kOne, kEmpty))));
  const Family f = F({kOne, kTwo});
  const HfSet fc = build_Fc(f, U2Variant::UnionOfProducts, OrderKind::WellOrder);
  EXPECT_EQ(fc.size(), 2u);
  EXPECT_EQ(fc, oracle::enumerate_choice_functions(f.members()));
}

TEST(Fc, SeparationRoutesMatchFormula) {
  // The bitmask φ_c route against the generic evaluator at small sizes.
  for (const auto& fam : {F({kOne}), F({kTwo}), F({kOne, kTwo}), F({kOne, kOneOne}),
                          F({kTwo, S("{{{}},{{{}}}}")})}) {
    for (auto v : {U2Variant::Literal, U2Variant::UnionOfProducts}) {
      const HfSet q_s = build_QS(fam, v, OrderKind::WellOrder);
      for (auto reading : {PhiCReading::Verbatim, PhiCReading::Selective}) {
        EXPECT_EQ(build_Fc_by_separation(fam, q_s, reading), fc_by_formula(fam, q_s, reading))
            << fam.members().to_string();
      }
    }
  }
}

TEST(Fc, SelectiveReadingEqualsClosedForm) {
  for (const auto& fam : fixtures::exhaustive_families()) {
    const Family f(fam);
    if (f.size() * f.union_set().size() > 10) continue;
    const HfSet q_s = build_QS(f, U2Variant::UnionOfProducts, OrderKind::WellOrder);
    EXPECT_EQ(build_Fc_by_separation(f, q_s), build_Fc_from_QS(q_s, f)) << fam.to_string();
  }
}

TEST(Fc, VerbatimReadingAdmitsForeignPairs) {
  // With A_U \ A nonempty the verbatim reading leaves (A, x), x ∉ A, free.
  const Family f = F({kOne, kOneOne});
  const HfSet q_s = build_QS(f, U2Variant::UnionOfProducts, OrderKind::WellOrder);
  const HfSet closed = build_Fc_from_QS(q_s, f);
  const HfSet verbatim = build_Fc_by_separation(f, q_s, PhiCReading::Verbatim);
  EXPECT_TRUE(is_subset(closed, verbatim));
  EXPECT_EQ(closed.size(), 1u);
  EXPECT_EQ(verbatim.size(), 4u);
}

TEST(Fc, SeparationCap) {
  const Family f = F({von_neumann(3), S("{{{}},{{{}}},{{{{}}}}}")});
  const HfSet q_s = build_QS(f, U2Variant::UnionOfProducts, OrderKind::WellOrder);
  EXPECT_THROW(build_Fc_by_separation(f, q_s, PhiCReading::Selective, Caps{8, 100}), CapExceeded);
}

TEST(ConverseOrder, OrderFromChoice) {
  const Family f = F({kOne});
  const ChoiceFunction c(singleton(ordered_pair(kOne, kEmpty)));
  EXPECT_EQ(theorem4_order_from_choice(kOne, c), identity_relation(kOne));

  const HfSet a = von_neumann(3);
  const ChoiceFunction g(singleton(ordered_pair(a, kOne)));
  const Relation r = theorem4_order_from_choice(a, g);
  EXPECT_EQ(r.pairs().size(), 5u);
  EXPECT_TRUE(satisfies(r, OrderKind::PartialOrderWithLeast));
  EXPECT_EQ(least_element(r), kOne);
  EXPECT_TRUE(phi3_holds(r, a, g));
  EXPECT_FALSE(phi3_holds(identity_relation(a), a, g));
}

TEST(ConverseOrder, EveryChoiceFunctionYieldsPols) {
  for (const auto& fam : fixtures::exhaustive_families()) {
    if (fam.size() > 2) continue;
    const Family f(fam);
    const HfSet functions = oracle::enumerate_choice_functions(fam);
    for (const auto& gr : functions.members()) {
      const ChoiceFunction g(gr);
      ASSERT_TRUE(g.is_valid_for(f));
      for (const auto& a : fam.members()) {
        const Relation r = theorem4_order_from_choice(a, g);
        EXPECT_TRUE(satisfies(r, OrderKind::PartialOrderWithLeast));
        EXPECT_EQ(least_element(r), g.at(a));
        EXPECT_TRUE(phi3_holds(r, a, g));
      }
    }
  }
}

TEST(Pipeline, UnionReport) {
  const PipelineReport r = run_pipeline(F({kOne, kTwo}), U2Variant::UnionOfProducts, OrderKind::WellOrder);
  EXPECT_FALSE(r.q_s_empty);
  EXPECT_EQ(r.f_c_size, 2u);
  EXPECT_TRUE(r.f_c_all_valid);
  EXPECT_EQ(r.q_s_filter_agrees, true);
  EXPECT_EQ(r.f_c_routes_agree, true);
  EXPECT_TRUE(r.capped_steps.empty());
  EXPECT_EQ(r.witnesses.size(), 2u);
}

TEST(Pipeline, LiteralReport) {
  const PipelineReport r = run_pipeline(F({kOne, kTwo}), U2Variant::Literal, OrderKind::WellOrder);
  EXPECT_TRUE(r.q_s_empty);
  EXPECT_EQ(r.f_c_size, 0u);
}

TEST(Pipeline, VariantsCoincideOnSingletons) {
  for (const auto& a : {kOne, kTwo, von_neumann(3)}) {
    const auto lit = run_pipeline(F({a}), U2Variant::Literal, OrderKind::WellOrder);
    const auto uni = run_pipeline(F({a}), U2Variant::UnionOfProducts, OrderKind::WellOrder);
    EXPECT_EQ(lit.q_s_size, uni.q_s_size);
    EXPECT_EQ(lit.f_c_size, uni.f_c_size);
    EXPECT_EQ(lit.witnesses, uni.witnesses);
    EXPECT_EQ(build_QS(F({a}), U2Variant::Literal, OrderKind::WellOrder),
              build_QS(F({a}), U2Variant::UnionOfProducts, OrderKind::WellOrder));
  }
}

TEST(Pipeline, CappedStepsAreRecorded) {
  const PipelineReport r = run_pipeline(F({kOne, kTwo}), U2Variant::UnionOfProducts,
                                        OrderKind::WellOrder, Caps{3, 100});
  EXPECT_FALSE(r.u1_size);
  EXPECT_FALSE(r.capped_steps.empty());
  EXPECT_EQ(r.f_c_size, 2u);
}

TEST(Fc, ValidAndForwardOverSpace) {
  for (auto kind : {OrderKind::WellOrder, OrderKind::PartialOrderWithLeast}) {
    for (const auto& fam : fixtures::exhaustive_families()) {
      const Family f(fam);
      const HfSet fc = build_Fc(f, U2Variant::UnionOfProducts, kind);
      ASSERT_FALSE(fc.empty()) << fam.to_string();
      for (const auto& g : fc.members()) ASSERT_TRUE(ChoiceFunction(g).is_valid_for(f)) << fam.to_string();
    }
  }
}

TEST(QS, KindMonotonicity) {
  const auto product_of = [](const HfSet& fam, OrderKind k) {
    std::uint64_t p = 1;
    for (const auto& a : fam.members()) p *= admissible_orders(a, k).size();
    return p;
  };
  std::size_t checked = 0;
  for (const auto& fam : fixtures::exhaustive_families()) {
    if (product_of(fam, OrderKind::UniqueUniversal) > 2000) continue;
    const Family f(fam);
    const HfSet wo = build_QS(f, U2Variant::UnionOfProducts, OrderKind::WellOrder);
    const HfSet pol = build_QS(f, U2Variant::UnionOfProducts, OrderKind::PartialOrderWithLeast);
    const HfSet uu = build_QS(f, U2Variant::UnionOfProducts, OrderKind::UniqueUniversal);
    ASSERT_TRUE(is_subset(wo, pol)) << fam.to_string();
    ASSERT_TRUE(is_subset(pol, uu)) << fam.to_string();
    ++checked;
  }
  EXPECT_GT(checked, 1000u);
}

TEST(Fc, UniqueUniversalStillComplete) {
  for (const auto& fam : fixtures::exhaustive_families()) {
    std::uint64_t product = 1;
    for (const auto& a : fam.members()) product *= admissible_orders(a, OrderKind::UniqueUniversal).size();
    if (product > 2000) continue;
    const Family f(fam);
    EXPECT_EQ(build_Fc(f, U2Variant::UnionOfProducts, OrderKind::UniqueUniversal),
              oracle::enumerate_choice_functions(fam))
        << fam.to_string();
  }
}
