#include <gtest/gtest.h>

#include "corpus.hpp"
#include "zflab/formula.hpp"

using namespace zflab;
using zflab::fixtures::formula_corpus;
using zflab::fixtures::random_formula;

namespace {

HfSet S(const char* text) { return parse_hfs(text); }

std::vector<HfSet> small_sets(Rng& rng, std::size_t count) {
  const auto universe = sets_of_rank_at_most(3);
  std::vector<HfSet> out;
  for (std::size_t t = 0; t < count; ++t) {
    std::vector<HfSet> elems;
    const auto n = uniform_int(rng, 0, 8);
    for (std::int64_t i = 0; i < n; ++i) elems.push_back(universe[uniform_int(rng, 0, 15)]);
    out.push_back(make_set(std::move(elems)));
  }
  return out;
}

}  // namespace

TEST(Parse, ForallExample) {
  const Formula f = parse_formula("forall x in A . x = x");
  EXPECT_EQ(f, Formula::forall_in("x", Term::var("A"),
                                  Formula::equals(Term::var("x"), Term::var("x"))));
}

TEST(Parse, ExistsUnique) {
  const Formula f = parse_formula("exists! m in A . forall b in A . (m,b) in R");
  ASSERT_EQ(f.kind(), FormulaKind::ExistsUniqueIn);
  EXPECT_EQ(f.var(), "m");
  EXPECT_EQ(f.body().kind(), FormulaKind::ForallIn);
  EXPECT_EQ(f.body().body().lhs_term().kind(), Term::Kind::Pair);
}

TEST(Parse, ExistsBangNeedsAdjacency) {
  // `exists !` is an existential over a negated body name, which is malformed.
  EXPECT_THROW(parse_formula("exists ! m in A . true"), ParseError);
}

TEST(Parse, Truncated) {
  EXPECT_THROW(parse_formula("x in"), ParseError);
  EXPECT_THROW(parse_formula("forall x in A"), ParseError);
  EXPECT_THROW(parse_formula("(x in A"), ParseError);
  EXPECT_THROW(parse_formula("x in A)"), ParseError);
  EXPECT_THROW(parse_formula("x - y"), ParseError);
  EXPECT_THROW(parse_formula(""), ParseError);
}

TEST(Parse, Associativity) {
  const Formula imp = parse_formula("a = a -> b = b -> c = c");
  ASSERT_EQ(imp.kind(), FormulaKind::Implies);
  EXPECT_EQ(imp.rhs().kind(), FormulaKind::Implies);
  const Formula iff = parse_formula("a = a <-> b = b <-> c = c");
  ASSERT_EQ(iff.kind(), FormulaKind::Iff);
  EXPECT_EQ(iff.lhs().kind(), FormulaKind::Iff);
  const Formula mix = parse_formula("a = a | b = b & c = c");
  ASSERT_EQ(mix.kind(), FormulaKind::Or);
  EXPECT_EQ(mix.rhs().kind(), FormulaKind::And);
}

TEST(Parse, QuantifierScopeExtendsRight) {
  const Formula f = parse_formula("forall x in A . x = x & x in A");
  ASSERT_EQ(f.kind(), FormulaKind::ForallIn);
  EXPECT_EQ(f.body().kind(), FormulaKind::And);
}

TEST(Parse, LiteralSetsFold) {
  const Formula f = parse_formula("x = {{}, {}}");
  ASSERT_EQ(f.rhs_term().kind(), Term::Kind::Literal);
  EXPECT_EQ(f.rhs_term().value(), S("{{}}"));
  EXPECT_EQ(parse_formula("x = {y}").rhs_term().kind(), Term::Kind::SetOf);
}

TEST(Eval, Examples) {
  EXPECT_TRUE(eval_formula(parse_formula("forall x in {} . x in x"), {}));
  const Formula f = parse_formula("exists! m in A . forall b in A . (m,b) in R");
  const HfSet a = S("{{},{{}}}");
  const HfSet e;
  const HfSet one = S("{{}}");
  Env env{{"A", a},
          {"R", make_set({ordered_pair(e, e), ordered_pair(e, one), ordered_pair(one, one)})}};
  EXPECT_TRUE(eval_formula(f, env));
  env["R"] = make_set({ordered_pair(e, e), ordered_pair(one, one)});
  EXPECT_FALSE(eval_formula(f, env));
}

TEST(Eval, Connectives) {
  const Env env{{"x", S("{}")}};
  EXPECT_TRUE(eval_formula(parse_formula("false -> x in x"), env));
  EXPECT_FALSE(eval_formula(parse_formula("true -> x in x"), env));
  EXPECT_TRUE(eval_formula(parse_formula("x in x <-> false"), env));
  EXPECT_TRUE(eval_formula(parse_formula("!(x in x) & (x = {} | false)"), env));
}

TEST(Eval, ExistsUniqueCounts) {
  const Env env{{"A", S("{{},{{}},{{{}}}}")}};
  EXPECT_FALSE(eval_formula(parse_formula("exists! y in A . !(y = {})"), env));
  EXPECT_TRUE(eval_formula(parse_formula("exists! y in A . y = {}"), env));
  EXPECT_FALSE(eval_formula(parse_formula("exists! y in A . false"), env));
}

TEST(Eval, Shadowing) {
  const Env env{{"x", S("{{}}")}, {"A", S("{{}}")}};
  EXPECT_TRUE(eval_formula(parse_formula("forall x in x . x = {}"), env));
  EXPECT_TRUE(eval_formula(parse_formula("(forall x in A . x = {}) & x = {{}}"), env));
}

TEST(Eval, Unbound) {
  EXPECT_THROW(eval_formula(parse_formula("x in A"), {{"A", {}}}), UnboundVariable);
  // Reported even when evaluation would never reach the atom.
  EXPECT_THROW(eval_formula(parse_formula("false & y = y"), {}), UnboundVariable);
}

TEST(Separation, Examples) {
  EXPECT_EQ(separation(S("{{},{{}}}"), "x", parse_formula("x = {}")), S("{{}}"));
  for (const auto& a : sets_of_rank_at_most(3)) {
    EXPECT_TRUE(separation(a, "x", parse_formula("x in x")).empty());
  }
}

TEST(FreeVars, Examples) {
  EXPECT_EQ(free_vars(parse_formula("x = y")), (std::set<std::string>{"x", "y"}));
  EXPECT_EQ(free_vars(parse_formula("forall x in A . x = y")), (std::set<std::string>{"A", "y"}));
  EXPECT_EQ(free_vars(parse_formula("forall x in A . x = x")), (std::set<std::string>{"A"}));
  EXPECT_EQ(free_vars(parse_formula("forall x in x . true")), (std::set<std::string>{"x"}));
}

TEST(Corpus, HasTwentyParsableFormulas) {
  ASSERT_EQ(formula_corpus().size(), 20u);
  for (const auto& text : formula_corpus()) {
    const Formula f = parse_formula(text);
    for (const auto& v : free_vars(f)) EXPECT_TRUE(v == "x" || v == "A") << text;
  }
}

TEST(Roundtrip, Corpus) {
  for (const auto& text : formula_corpus()) {
    const Formula f = parse_formula(text);
    EXPECT_EQ(parse_formula(print_formula(f)), f) << text << " printed as " << print_formula(f);
  }
}

TEST(Roundtrip, GeneratedAsts) {
  Rng rng(5);
  for (int t = 0; t < 2000; ++t) {
    const Formula f = random_formula(rng, {"x", "A"}, 4);
    const std::string printed = print_formula(f);
    Formula back;
    ASSERT_NO_THROW(back = parse_formula(printed)) << printed;
    EXPECT_EQ(back, f) << printed;
    EXPECT_EQ(print_formula(back), printed);
  }
}

TEST(Printer, MinimalParentheses) {
  EXPECT_EQ(print_formula(parse_formula("(a = a & b = b) | c = c")), "a = a & b = b | c = c");
  EXPECT_EQ(print_formula(parse_formula("a = a -> (b = b -> c = c)")), "a = a -> b = b -> c = c");
  EXPECT_EQ(print_formula(parse_formula("(a = a -> b = b) -> c = c")), "(a = a -> b = b) -> c = c");
  EXPECT_EQ(print_formula(parse_formula("!(forall y in A . y = y)")), "!(forall y in A . y = y)");
}

TEST(Separation, MatchesDirectFilter) {
  Rng rng(17);
  for (const auto& a : small_sets(rng, 60)) {
    for (const auto& text : formula_corpus()) {
      const Formula f = parse_formula(text);
      const Env env{{"A", a}};
      std::vector<HfSet> kept;
      for (const auto& x : a.members()) {
        Env with_x = env;
        with_x["x"] = x;
        if (eval_formula(f, with_x)) kept.push_back(x);
      }
      EXPECT_EQ(separation(a, "x", f, env), make_set(kept)) << text << " over " << a.to_string();
    }
  }
}

TEST(Quantifier, MonotoneDomain) {
  Rng rng(23);
  for (const auto& a : small_sets(rng, 40)) {
    const HfSet sub = make_set([&] {
      std::vector<HfSet> v;
      for (const auto& x : a.members()) {
        if (uniform_int(rng, 0, 1)) v.push_back(x);
      }
      return v;
    }());
    for (const auto& text : formula_corpus()) {
      const Formula all = Formula::forall_in("x", Term::var("D"), parse_formula(text));
      if (eval_formula(all, {{"A", a}, {"D", a}})) {
        EXPECT_TRUE(eval_formula(all, {{"A", a}, {"D", sub}})) << text;
      }
    }
  }
}
