#pragma once

// Bounded first-order formulas over hereditarily finite sets.
//
// Every quantifier ranges over the members of a domain term, so evaluation
// always terminates. Atoms are membership and equality between terms; the
// pair term `(s,t)` denotes the Kuratowski encoding of its components.

#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "zflab/hfs.hpp"

namespace zflab {

using Env = std::map<std::string, HfSet, std::less<>>;

class Term {
 public:
  enum class Kind { Var, Literal, Pair, SetOf };

  static Term var(std::string name);
  static Term literal(HfSet value);
  static Term pair(Term first, Term second);
  // Folds to a Literal when every element is a literal.
  static Term set_of(std::vector<Term> elems);

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  const HfSet& value() const { return value_; }
  const std::vector<Term>& parts() const { return parts_; }

  friend bool operator==(const Term&, const Term&) = default;

 private:
  Kind kind_ = Kind::Literal;
  std::string name_;
  HfSet value_;
  std::vector<Term> parts_;
};

enum class FormulaKind {
  True,
  False,
  MemberOf,
  Equals,
  Not,
  And,
  Or,
  Implies,
  Iff,
  ForallIn,
  ExistsIn,
  ExistsUniqueIn,
};

class Formula {
 public:
  Formula();  // `true`

  static Formula truth(bool value);
  static Formula member_of(Term element, Term set);
  static Formula equals(Term lhs, Term rhs);
  static Formula negation(Formula f);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);
  static Formula biconditional(Formula lhs, Formula rhs);
  static Formula forall_in(std::string var, Term domain, Formula body);
  static Formula exists_in(std::string var, Term domain, Formula body);
  static Formula exists_unique_in(std::string var, Term domain, Formula body);

  FormulaKind kind() const;
  // MemberOf / Equals operands.
  const Term& lhs_term() const;
  const Term& rhs_term() const;
  // Not uses lhs(); binary connectives use lhs() and rhs().
  const Formula& lhs() const;
  const Formula& rhs() const;
  // Quantifiers.
  const std::string& var() const;
  const Term& domain() const;
  const Formula& body() const;

  bool is_quantifier() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

// Grammar:
//   formula := quant | iff
//   quant   := ('forall'|'exists'|'exists!') IDENT 'in' term '.' formula
//   iff     := imp ('<->' imp)*        left-associative
//   imp     := or ('->' or)*           right-associative
//   or      := and ('|' and)*
//   and     := unary ('&' unary)*
//   unary   := '!' unary | atom
//   atom    := term 'in' term | term '=' term | '(' formula ')' | 'true' | 'false'
//   term    := IDENT | setlit | '(' term ',' term ')'
//   setlit  := '{' (term (',' term)*)? '}'
Formula parse_formula(std::string_view text);

// Minimal-parenthesis rendering; parse_formula(print_formula(f)) == f.
std::string print_formula(const Formula& f);
std::string print_term(const Term& t);

std::set<std::string> free_vars(const Formula& f);
std::set<std::string> free_vars(const Term& t);

// Throws UnboundVariable when a free variable of `f` is missing from `env`.
bool eval_formula(const Formula& f, const Env& env);
HfSet eval_term(const Term& t, const Env& env);

// {x ∈ a | f(x)} with `var` bound to x. Throws UnboundVariable.
HfSet separation(const HfSet& a, std::string_view var, const Formula& f, const Env& env = {});

}  // namespace zflab
