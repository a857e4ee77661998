#include "zflab/formula.hpp"

#include <cctype>
#include <optional>

namespace zflab {

// ---------------------------------------------------------------------------
// Terms

Term Term::var(std::string name) {
  Term t;
  t.kind_ = Kind::Var;
  t.name_ = std::move(name);
  return t;
}

Term Term::literal(HfSet value) {
  Term t;
  t.kind_ = Kind::Literal;
  t.value_ = std::move(value);
  return t;
}

Term Term::pair(Term first, Term second) {
  Term t;
  t.kind_ = Kind::Pair;
  t.parts_ = {std::move(first), std::move(second)};
  return t;
}

Term Term::set_of(std::vector<Term> elems) {
  bool all_literal = true;
  for (const auto& e : elems) all_literal = all_literal && e.kind() == Kind::Literal;
  if (all_literal) {
    std::vector<HfSet> values;
    for (auto& e : elems) values.push_back(e.value());
    return literal(make_set(std::move(values)));
  }
  Term t;
  t.kind_ = Kind::SetOf;
  t.parts_ = std::move(elems);
  return t;
}

// ---------------------------------------------------------------------------
// Formulas

struct Formula::Node {
  FormulaKind kind;
  Term a, b;  // atom operands, or the quantifier domain in `a`
  std::string var;
  std::vector<Formula> subs;  // operands, or the quantifier body
};

Formula::Formula() : Formula(truth(true)) {}
Formula::Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Formula Formula::truth(bool value) {
  return Formula(
      std::make_shared<Node>(Node{value ? FormulaKind::True : FormulaKind::False, {}, {}, {}, {}}));
}

Formula Formula::member_of(Term element, Term set) {
  return Formula(std::make_shared<Node>(
      Node{FormulaKind::MemberOf, std::move(element), std::move(set), {}, {}}));
}

Formula Formula::equals(Term lhs, Term rhs) {
  return Formula(
      std::make_shared<Node>(Node{FormulaKind::Equals, std::move(lhs), std::move(rhs), {}, {}}));
}

Formula Formula::negation(Formula f) {
  return Formula(std::make_shared<Node>(Node{FormulaKind::Not, {}, {}, {}, {std::move(f)}}));
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<Node>(Node{FormulaKind::And, {}, {}, {}, {lhs, rhs}}));
}
Formula Formula::disjunction(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<Node>(Node{FormulaKind::Or, {}, {}, {}, {lhs, rhs}}));
}
Formula Formula::implication(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<Node>(Node{FormulaKind::Implies, {}, {}, {}, {lhs, rhs}}));
}
Formula Formula::biconditional(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<Node>(Node{FormulaKind::Iff, {}, {}, {}, {lhs, rhs}}));
}

Formula Formula::forall_in(std::string var, Term domain, Formula body) {
  return Formula(std::make_shared<Node>(
      Node{FormulaKind::ForallIn, std::move(domain), {}, std::move(var), {std::move(body)}}));
}
Formula Formula::exists_in(std::string var, Term domain, Formula body) {
  return Formula(std::make_shared<Node>(
      Node{FormulaKind::ExistsIn, std::move(domain), {}, std::move(var), {std::move(body)}}));
}
Formula Formula::exists_unique_in(std::string var, Term domain, Formula body) {
  return Formula(std::make_shared<Node>(Node{FormulaKind::ExistsUniqueIn, std::move(domain), {},
                                             std::move(var), {std::move(body)}}));
}

FormulaKind Formula::kind() const { return node_->kind; }
const Term& Formula::lhs_term() const { return node_->a; }
const Term& Formula::rhs_term() const { return node_->b; }
const std::string& Formula::var() const { return node_->var; }
const Term& Formula::domain() const { return node_->a; }
const Formula& Formula::lhs() const { return node_->subs.at(0); }
const Formula& Formula::rhs() const { return node_->subs.at(1); }
const Formula& Formula::body() const { return node_->subs.at(0); }

bool Formula::is_quantifier() const {
  auto k = kind();
  return k == FormulaKind::ForallIn || k == FormulaKind::ExistsIn ||
         k == FormulaKind::ExistsUniqueIn;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case FormulaKind::True:
    case FormulaKind::False:
      return true;
    case FormulaKind::MemberOf:
    case FormulaKind::Equals:
      return a.lhs_term() == b.lhs_term() && a.rhs_term() == b.rhs_term();
    case FormulaKind::Not:
      return a.lhs() == b.lhs();
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
    case FormulaKind::Iff:
      return a.lhs() == b.lhs() && a.rhs() == b.rhs();
    case FormulaKind::ForallIn:
    case FormulaKind::ExistsIn:
    case FormulaKind::ExistsUniqueIn:
      return a.var() == b.var() && a.domain() == b.domain() && a.body() == b.body();
  }
  return false;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

enum class Tok {
  Ident,
  Forall,
  Exists,
  ExistsUnique,
  In,
  True,
  False,
  LBrace,
  RBrace,
  LParen,
  RParen,
  Comma,
  Dot,
  Eq,
  And,
  Or,
  Not,
  Implies,
  Iff,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (ident_start(c)) {
      while (i < s.size() && ident_char(s[i])) ++i;
      std::string word(s.substr(start, i - start));
      Tok k = Tok::Ident;
      if (word == "forall") k = Tok::Forall;
      else if (word == "exists") {
        k = Tok::Exists;
        if (i < s.size() && s[i] == '!') {
          k = Tok::ExistsUnique;
          ++i;
          word += '!';
        }
      } else if (word == "in") k = Tok::In;
      else if (word == "true") k = Tok::True;
      else if (word == "false") k = Tok::False;
      out.push_back({k, std::move(word), start});
      continue;
    }
    auto single = [&](Tok k) {
      out.push_back({k, std::string(1, c), start});
      ++i;
    };
    switch (c) {
      case '{': single(Tok::LBrace); break;
      case '}': single(Tok::RBrace); break;
      case '(': single(Tok::LParen); break;
      case ')': single(Tok::RParen); break;
      case ',': single(Tok::Comma); break;
      case '.': single(Tok::Dot); break;
      case '=': single(Tok::Eq); break;
      case '&': single(Tok::And); break;
      case '|': single(Tok::Or); break;
      case '!': single(Tok::Not); break;
      case '-':
        if (s.substr(i, 2) == "->") {
          out.push_back({Tok::Implies, "->", start});
          i += 2;
          break;
        }
        throw ParseError("unexpected '-'", start);
      case '<':
        if (s.substr(i, 3) == "<->") {
          out.push_back({Tok::Iff, "<->", start});
          i += 3;
          break;
        }
        throw ParseError("unexpected '<'", start);
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

class FormulaParser {
 public:
  explicit FormulaParser(std::string_view text) : toks_(tokenize(text)) {}

  Formula parse_all() {
    Formula f = formula();
    if (peek() != Tok::End) fail("unexpected '" + cur().text + "'");
    return f;
  }

 private:
  const Token& cur() const { return toks_[pos_]; }
  Tok peek() const { return cur().kind; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, cur().pos); }
  void expect(Tok k, const char* what) {
    if (peek() != k) fail(std::string("expected ") + what);
    ++pos_;
  }
  bool accept(Tok k) {
    if (peek() != k) return false;
    ++pos_;
    return true;
  }

  Formula formula() {
    Tok k = peek();
    if (k == Tok::Forall || k == Tok::Exists || k == Tok::ExistsUnique) {
      ++pos_;
      if (peek() != Tok::Ident) fail("expected a variable name");
      std::string var = cur().text;
      ++pos_;
      expect(Tok::In, "'in'");
      Term dom = term();
      expect(Tok::Dot, "'.'");
      Formula body = formula();
      if (k == Tok::Forall) return Formula::forall_in(std::move(var), std::move(dom), body);
      if (k == Tok::Exists) return Formula::exists_in(std::move(var), std::move(dom), body);
      return Formula::exists_unique_in(std::move(var), std::move(dom), body);
    }
    return iff();
  }

  Formula iff() {
    Formula f = imp();
    while (accept(Tok::Iff)) f = Formula::biconditional(f, imp());
    return f;
  }

  Formula imp() {
    Formula f = disj();
    if (accept(Tok::Implies)) return Formula::implication(f, imp());
    return f;
  }

  Formula disj() {
    Formula f = conj();
    while (accept(Tok::Or)) f = Formula::disjunction(f, conj());
    return f;
  }

  Formula conj() {
    Formula f = unary();
    while (accept(Tok::And)) f = Formula::conjunction(f, unary());
    return f;
  }

  Formula unary() {
    if (accept(Tok::Not)) return Formula::negation(unary());
    return atom();
  }

  Formula atom() {
    if (accept(Tok::True)) return Formula::truth(true);
    if (accept(Tok::False)) return Formula::truth(false);
    if (peek() == Tok::LParen) {
      // Either a pair term starting an atom, or a parenthesized formula.
      const std::size_t save = pos_;
      std::optional<Formula> as_atom;
      try {
        as_atom = term_atom();
      } catch (const ParseError&) {
      }
      if (as_atom) return *as_atom;
      pos_ = save;
      ++pos_;
      Formula f = formula();
      expect(Tok::RParen, "')'");
      return f;
    }
    return term_atom();
  }

  Formula term_atom() {
    Term lhs = term();
    if (accept(Tok::In)) return Formula::member_of(std::move(lhs), term());
    if (accept(Tok::Eq)) return Formula::equals(std::move(lhs), term());
    fail("expected 'in' or '='");
  }

  Term term() {
    if (peek() == Tok::Ident) {
      std::string name = cur().text;
      ++pos_;
      return Term::var(std::move(name));
    }
    if (accept(Tok::LBrace)) {
      std::vector<Term> elems;
      if (!accept(Tok::RBrace)) {
        elems.push_back(term());
        while (accept(Tok::Comma)) elems.push_back(term());
        expect(Tok::RBrace, "'}'");
      }
      return Term::set_of(std::move(elems));
    }
    if (accept(Tok::LParen)) {
      Term a = term();
      expect(Tok::Comma, "','");
      Term b = term();
      expect(Tok::RParen, "')'");
      return Term::pair(std::move(a), std::move(b));
    }
    fail("expected a term");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text) { return FormulaParser(text).parse_all(); }

// ---------------------------------------------------------------------------
// Printer

std::string print_term(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Var:
      return t.name();
    case Term::Kind::Literal:
      return t.value().to_string();
    case Term::Kind::Pair:
      return "(" + print_term(t.parts()[0]) + ", " + print_term(t.parts()[1]) + ")";
    case Term::Kind::SetOf: {
      std::string out = "{";
      for (std::size_t i = 0; i < t.parts().size(); ++i) {
        if (i) out += ", ";
        out += print_term(t.parts()[i]);
      }
      return out + "}";
    }
  }
  return {};
}

namespace {

// Binding strength; a subformula below `min_level` gets parentheses.
enum Level { kTop = 0, kIff = 1, kImp = 2, kOr = 3, kAnd = 4, kUnary = 5 };

std::string print_at(const Formula& f, int min_level) {
  auto binop = [&](int level, const char* op, bool right_assoc) {
    std::string s = print_at(f.lhs(), right_assoc ? level + 1 : level) + op +
                    print_at(f.rhs(), right_assoc ? level : level + 1);
    return level < min_level ? "(" + s + ")" : s;
  };
  switch (f.kind()) {
    case FormulaKind::True:
      return "true";
    case FormulaKind::False:
      return "false";
    case FormulaKind::MemberOf:
      return print_term(f.lhs_term()) + " in " + print_term(f.rhs_term());
    case FormulaKind::Equals:
      return print_term(f.lhs_term()) + " = " + print_term(f.rhs_term());
    case FormulaKind::Not:
      return "!" + print_at(f.lhs(), kUnary);
    case FormulaKind::And:
      return binop(kAnd, " & ", false);
    case FormulaKind::Or:
      return binop(kOr, " | ", false);
    case FormulaKind::Implies:
      return binop(kImp, " -> ", true);
    case FormulaKind::Iff:
      return binop(kIff, " <-> ", false);
    case FormulaKind::ForallIn:
    case FormulaKind::ExistsIn:
    case FormulaKind::ExistsUniqueIn: {
      const char* q = f.kind() == FormulaKind::ForallIn  ? "forall "
                      : f.kind() == FormulaKind::ExistsIn ? "exists "
                                                          : "exists! ";
      std::string s = q + f.var() + " in " + print_term(f.domain()) + " . " +
                      print_at(f.body(), kTop);
      return min_level > kTop ? "(" + s + ")" : s;
    }
  }
  return {};
}

}  // namespace

std::string print_formula(const Formula& f) { return print_at(f, kTop); }

// ---------------------------------------------------------------------------
// Free variables

std::set<std::string> free_vars(const Term& t) {
  std::set<std::string> out;
  if (t.kind() == Term::Kind::Var) out.insert(t.name());
  for (const auto& p : t.parts()) out.merge(free_vars(p));
  return out;
}

std::set<std::string> free_vars(const Formula& f) {
  std::set<std::string> out;
  switch (f.kind()) {
    case FormulaKind::True:
    case FormulaKind::False:
      break;
    case FormulaKind::MemberOf:
    case FormulaKind::Equals:
      out = free_vars(f.lhs_term());
      out.merge(free_vars(f.rhs_term()));
      break;
    case FormulaKind::Not:
      out = free_vars(f.lhs());
      break;
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
    case FormulaKind::Iff:
      out = free_vars(f.lhs());
      out.merge(free_vars(f.rhs()));
      break;
    case FormulaKind::ForallIn:
    case FormulaKind::ExistsIn:
    case FormulaKind::ExistsUniqueIn:
      out = free_vars(f.body());
      out.erase(f.var());
      // The domain is outside the binder's scope.
      out.merge(free_vars(f.domain()));
      break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

// Quantifier bindings form a stack-allocated chain in front of the base env.
struct Scope {
  const Env& base;
  std::string_view name;
  const HfSet* value;
  const Scope* parent;

  const HfSet& lookup(const std::string& var) const {
    for (const Scope* s = this; s; s = s->parent) {
      if (s->value && s->name == var) return *s->value;
    }
    auto it = base.find(var);
    if (it == base.end()) throw UnboundVariable("unbound variable '" + var + "'");
    return it->second;
  }
};

HfSet term_value(const Term& t, const Scope& sc) {
  switch (t.kind()) {
    case Term::Kind::Var:
      return sc.lookup(t.name());
    case Term::Kind::Literal:
      return t.value();
    case Term::Kind::Pair:
      return ordered_pair(term_value(t.parts()[0], sc), term_value(t.parts()[1], sc));
    case Term::Kind::SetOf: {
      std::vector<HfSet> elems;
      for (const auto& p : t.parts()) elems.push_back(term_value(p, sc));
      return make_set(std::move(elems));
    }
  }
  return {};
}

bool holds(const Formula& f, const Scope& sc) {
  switch (f.kind()) {
    case FormulaKind::True:
      return true;
    case FormulaKind::False:
      return false;
    case FormulaKind::MemberOf:
      return term_value(f.rhs_term(), sc).contains(term_value(f.lhs_term(), sc));
    case FormulaKind::Equals:
      return term_value(f.lhs_term(), sc) == term_value(f.rhs_term(), sc);
    case FormulaKind::Not:
      return !holds(f.lhs(), sc);
    case FormulaKind::And:
      return holds(f.lhs(), sc) && holds(f.rhs(), sc);
    case FormulaKind::Or:
      return holds(f.lhs(), sc) || holds(f.rhs(), sc);
    case FormulaKind::Implies:
      return !holds(f.lhs(), sc) || holds(f.rhs(), sc);
    case FormulaKind::Iff:
      return holds(f.lhs(), sc) == holds(f.rhs(), sc);
    case FormulaKind::ForallIn:
    case FormulaKind::ExistsIn:
    case FormulaKind::ExistsUniqueIn: {
      const HfSet dom = term_value(f.domain(), sc);
      std::size_t hits = 0;
      for (const auto& x : dom.members()) {
        Scope inner{sc.base, f.var(), &x, &sc};
        const bool b = holds(f.body(), inner);
        if (f.kind() == FormulaKind::ForallIn) {
          if (!b) return false;
        } else if (b) {
          if (f.kind() == FormulaKind::ExistsIn) return true;
          if (++hits > 1) return false;
        }
      }
      if (f.kind() == FormulaKind::ForallIn) return true;
      if (f.kind() == FormulaKind::ExistsIn) return false;
      return hits == 1;
    }
  }
  return false;
}

void require_bound(const std::set<std::string>& vars, const Env& env, std::string_view extra) {
  for (const auto& v : vars) {
    if (v != extra && env.find(v) == env.end()) {
      throw UnboundVariable("unbound variable '" + v + "'");
    }
  }
}

}  // namespace

bool eval_formula(const Formula& f, const Env& env) {
  require_bound(free_vars(f), env, {});
  return holds(f, Scope{env, {}, nullptr, nullptr});
}

HfSet eval_term(const Term& t, const Env& env) {
  require_bound(free_vars(t), env, {});
  return term_value(t, Scope{env, {}, nullptr, nullptr});
}

HfSet separation(const HfSet& a, std::string_view var, const Formula& f, const Env& env) {
  require_bound(free_vars(f), env, var);
  const Scope root{env, {}, nullptr, nullptr};
  std::vector<HfSet> kept;
  for (const auto& x : a.members()) {
    Scope sc{env, var, &x, &root};
    if (holds(f, sc)) kept.push_back(x);
  }
  return HfSet::from_canonical(std::move(kept));
}

}  // namespace zflab
