#include "catstar/logic.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

namespace catstar {

SValue Fragment::resolve(const std::string& name) const {
  auto it = bindings.find(name);
  if (it != bindings.end()) return it->second;
  if (std::find(base_atoms.begin(), base_atoms.end(), name) != base_atoms.end())
    return SValue::base(name);
  if (name == "emptyset") return SValue::empty_set();
  throw StructuralError("unknown constant: " + name);
}

bool Fragment::knows(const std::string& name) const {
  return name == "emptyset" || bindings.count(name) ||
         std::find(base_atoms.begin(), base_atoms.end(), name) != base_atoms.end();
}

Fragment parse_fragment(std::istream& in) {
  Fragment frag;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "base") {
      std::string atom;
      while (ls >> atom) frag.base_atoms.push_back(atom);
    } else if (head == "maxrank") {
      ls >> frag.config.max_rank;
    } else if (head == "encoding") {
      std::string enc;
      ls >> enc;
      if (enc == "flat")
        frag.config.encoding = PairEncoding::Flat;
      else if (enc == "kuratowski")
        frag.config.encoding = PairEncoding::Kuratowski;
      else
        throw ParseError("unknown pair encoding " + enc, lineno, 1);
    } else {
      std::string eq;
      if (!(ls >> eq) || eq != "=") throw ParseError("expected '<name> = <value>'", lineno, 1);
      std::string rest;
      std::getline(ls, rest);
      frag.bindings[head] = parse_svalue(rest, frag.base_atoms);
    }
  }
  for (const auto& [name, v] : frag.bindings)
    if (v.rank() > frag.config.max_rank)
      throw StructuralError("constant " + name + " has rank " + std::to_string(v.rank()) +
                            " above the bound " + std::to_string(frag.config.max_rank));
  return frag;
}

Fragment load_fragment_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StructuralError("cannot open fragment file: " + path);
  return parse_fragment(in);
}

TermPtr Term::constant(SValue v) {
  auto t = std::make_shared<Term>();
  t->kind = Kind::Constant;
  t->value = std::move(v);
  return t;
}

TermPtr Term::variable(std::string name) {
  auto t = std::make_shared<Term>();
  t->kind = Kind::Variable;
  t->var = std::move(name);
  return t;
}

TermPtr Term::pair(TermPtr x, TermPtr y) {
  auto t = std::make_shared<Term>();
  t->kind = Kind::Pair;
  t->a = std::move(x);
  t->b = std::move(y);
  return t;
}

TermPtr Term::apply(TermPtr f, TermPtr x) {
  auto t = std::make_shared<Term>();
  t->kind = Kind::Apply;
  t->a = std::move(f);
  t->b = std::move(x);
  return t;
}

namespace {

FormulaPtr mk(Formula::Kind k) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  return f;
}

void check_bound_term(const std::string& var, const TermPtr& t) {
  if (term_vars(t).count(var))
    throw StructuralError("bound variable " + var + " appears in the bound term");
}

}  // namespace

FormulaPtr Formula::eq(TermPtr s, TermPtr t) {
  auto f = mk(Kind::Eq);
  auto* m = const_cast<Formula*>(f.get());
  m->s = std::move(s);
  m->t = std::move(t);
  return f;
}

FormulaPtr Formula::in(TermPtr s, TermPtr t) {
  auto f = mk(Kind::In);
  auto* m = const_cast<Formula*>(f.get());
  m->s = std::move(s);
  m->t = std::move(t);
  return f;
}

FormulaPtr Formula::lnot(FormulaPtr x) {
  auto f = mk(Kind::Not);
  const_cast<Formula*>(f.get())->f = std::move(x);
  return f;
}

#define CATSTAR_BINARY(NAME, KIND)                        \
  FormulaPtr Formula::NAME(FormulaPtr x, FormulaPtr y) {  \
    auto out = mk(Kind::KIND);                            \
    auto* m = const_cast<Formula*>(out.get());            \
    m->f = std::move(x);                                  \
    m->g = std::move(y);                                  \
    return out;                                           \
  }

CATSTAR_BINARY(land, And)
CATSTAR_BINARY(lor, Or)
CATSTAR_BINARY(implies, Implies)
CATSTAR_BINARY(iff, Iff)
#undef CATSTAR_BINARY

FormulaPtr Formula::forall(std::string var, TermPtr t, FormulaPtr body) {
  check_bound_term(var, t);
  auto f = mk(Kind::Forall);
  auto* m = const_cast<Formula*>(f.get());
  m->var = std::move(var);
  m->t = std::move(t);
  m->f = std::move(body);
  return f;
}

FormulaPtr Formula::exists(std::string var, TermPtr t, FormulaPtr body) {
  check_bound_term(var, t);
  auto f = mk(Kind::Exists);
  auto* m = const_cast<Formula*>(f.get());
  m->var = std::move(var);
  m->t = std::move(t);
  m->f = std::move(body);
  return f;
}

FormulaPtr Formula::exists1(std::string var, TermPtr t, FormulaPtr body) {
  check_bound_term(var, t);
  auto f = mk(Kind::Exists1);
  auto* m = const_cast<Formula*>(f.get());
  m->var = std::move(var);
  m->t = std::move(t);
  m->f = std::move(body);
  return f;
}

// ---------------------------------------------------------------------------
// parser

namespace {

struct Token {
  enum class Kind { Ident, LBrace, RBrace, LParen, RParen, Comma, Colon, Equals, End };
  Kind kind;
  std::string text;
  std::size_t pos;
};

struct Lexer {
  const std::string& text;
  std::size_t pos = 0;

  Token next() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) return {Token::Kind::End, "", pos};
    char c = text[pos];
    switch (c) {
      case '{': return {Token::Kind::LBrace, "{", pos++};
      case '}': return {Token::Kind::RBrace, "}", pos++};
      case '(': return {Token::Kind::LParen, "(", pos++};
      case ')': return {Token::Kind::RParen, ")", pos++};
      case ',': return {Token::Kind::Comma, ",", pos++};
      case ':': return {Token::Kind::Colon, ":", pos++};
      case '=': return {Token::Kind::Equals, "=", pos++};
      default: break;
    }
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
        ++pos;
      return {Token::Kind::Ident, text.substr(start, pos - start), start};
    }
    throw ParseError(std::string("unexpected character '") + c + "'", 1, pos + 1);
  }
};

struct Parser {
  Lexer lex;
  const Fragment& frag;
  Token tok;

  explicit Parser(const std::string& text, const Fragment& f) : lex{text}, frag(f) { advance(); }

  void advance() { tok = lex.next(); }

  [[noreturn]] void fail(const std::string& what) { throw ParseError(what, 1, tok.pos + 1); }

  void expect(Token::Kind k, const char* what) {
    if (tok.kind != k) fail(std::string("expected ") + what);
    advance();
  }

  static bool is_variable(const std::string& name) {
    return !name.empty() && std::isupper(static_cast<unsigned char>(name[0]));
  }

  SValue brace_literal() {
    // reuses the svalue parser over the remaining text from the '{'
    std::size_t start = tok.pos;
    int depth = 0;
    std::size_t i = start;
    for (; i < lex.text.size(); ++i) {
      if (lex.text[i] == '{') ++depth;
      if (lex.text[i] == '}' && --depth == 0) {
        ++i;
        break;
      }
    }
    if (depth != 0) fail("unbalanced braces");
    auto v = parse_svalue(lex.text.substr(start, i - start), frag.base_atoms);
    lex.pos = i;
    advance();
    return v;
  }

  TermPtr term() {
    if (tok.kind == Token::Kind::LBrace) return Term::constant(brace_literal());
    if (tok.kind != Token::Kind::Ident) fail("expected term");
    std::string name = tok.text;
    if (name == "pair" || name == "app") {
      advance();
      expect(Token::Kind::LParen, "'('");
      auto a = term();
      expect(Token::Kind::Comma, "','");
      auto b = term();
      expect(Token::Kind::RParen, "')'");
      return name == "pair" ? Term::pair(a, b) : Term::apply(a, b);
    }
    advance();
    if (is_variable(name)) return Term::variable(name);
    if (!frag.knows(name)) fail("unknown constant: " + name);
    return Term::constant(frag.resolve(name));
  }

  FormulaPtr formula() {
    if (tok.kind == Token::Kind::Ident &&
        (tok.text == "forall" || tok.text == "exists" || tok.text == "exists1")) {
      std::string q = tok.text;
      advance();
      if (tok.kind != Token::Kind::Ident || !is_variable(tok.text))
        fail("expected a variable after quantifier");
      std::string var = tok.text;
      advance();
      if (tok.kind != Token::Kind::Ident || tok.text != "in") fail("expected 'in'");
      advance();
      auto bound = term();
      expect(Token::Kind::Colon, "':'");
      auto body = formula();
      try {
        if (q == "forall") return Formula::forall(var, bound, body);
        if (q == "exists") return Formula::exists(var, bound, body);
        return Formula::exists1(var, bound, body);
      } catch (const StructuralError& e) {
        fail(e.what());
      }
    }
    if (tok.kind == Token::Kind::Ident && tok.text == "not") {
      advance();
      return Formula::lnot(formula());
    }
    if (tok.kind == Token::Kind::LParen) {
      advance();
      auto lhs = formula();
      if (tok.kind == Token::Kind::RParen) {  // plain grouping
        advance();
        return lhs;
      }
      if (tok.kind != Token::Kind::Ident) fail("expected a connective");
      std::string conn = tok.text;
      advance();
      auto rhs = formula();
      expect(Token::Kind::RParen, "')'");
      if (conn == "and") return Formula::land(lhs, rhs);
      if (conn == "or") return Formula::lor(lhs, rhs);
      if (conn == "implies") return Formula::implies(lhs, rhs);
      if (conn == "iff") return Formula::iff(lhs, rhs);
      fail("unknown connective " + conn);
    }
    // atomic: term (= | in) term
    auto lhs = term();
    if (tok.kind == Token::Kind::Equals) {
      advance();
      return Formula::eq(lhs, term());
    }
    if (tok.kind == Token::Kind::Ident && tok.text == "in") {
      advance();
      return Formula::in(lhs, term());
    }
    fail("expected '=' or 'in'");
  }
};

}  // namespace

TermPtr parse_term(const std::string& text, const Fragment& frag) {
  Parser p(text, frag);
  auto t = p.term();
  if (p.tok.kind != Token::Kind::End) p.fail("trailing input after term");
  return t;
}

FormulaPtr parse_formula(const std::string& text, const Fragment& frag) {
  Parser p(text, frag);
  auto f = p.formula();
  if (p.tok.kind != Token::Kind::End) p.fail("trailing input after formula");
  return f;
}

// ---------------------------------------------------------------------------
// printing / equality

std::string print_term(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::Constant: return t->value.str();
    case Term::Kind::Variable: return t->var;
    case Term::Kind::Pair: return "pair(" + print_term(t->a) + ", " + print_term(t->b) + ")";
    case Term::Kind::Apply: return "app(" + print_term(t->a) + ", " + print_term(t->b) + ")";
  }
  return "?";
}

std::string print_formula(const FormulaPtr& f) {
  using K = Formula::Kind;
  switch (f->kind) {
    case K::Eq: return print_term(f->s) + " = " + print_term(f->t);
    case K::In: return print_term(f->s) + " in " + print_term(f->t);
    case K::Not: return "not " + print_formula(f->f);
    case K::And: return "(" + print_formula(f->f) + " and " + print_formula(f->g) + ")";
    case K::Or: return "(" + print_formula(f->f) + " or " + print_formula(f->g) + ")";
    case K::Implies: return "(" + print_formula(f->f) + " implies " + print_formula(f->g) + ")";
    case K::Iff: return "(" + print_formula(f->f) + " iff " + print_formula(f->g) + ")";
    case K::Forall: return "forall " + f->var + " in " + print_term(f->t) + " : " + print_formula(f->f);
    case K::Exists: return "exists " + f->var + " in " + print_term(f->t) + " : " + print_formula(f->f);
    case K::Exists1:
      return "exists1 " + f->var + " in " + print_term(f->t) + " : " + print_formula(f->f);
  }
  return "?";
}

bool term_equal(const TermPtr& a, const TermPtr& b) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Term::Kind::Constant: return a->value == b->value;
    case Term::Kind::Variable: return a->var == b->var;
    default: return term_equal(a->a, b->a) && term_equal(a->b, b->b);
  }
}

bool formula_equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a->kind != b->kind) return false;
  using K = Formula::Kind;
  switch (a->kind) {
    case K::Eq:
    case K::In: return term_equal(a->s, b->s) && term_equal(a->t, b->t);
    case K::Not: return formula_equal(a->f, b->f);
    case K::And:
    case K::Or:
    case K::Implies:
    case K::Iff: return formula_equal(a->f, b->f) && formula_equal(a->g, b->g);
    default:
      return a->var == b->var && term_equal(a->t, b->t) && formula_equal(a->f, b->f);
  }
}

std::set<std::string> term_vars(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::Constant: return {};
    case Term::Kind::Variable: return {t->var};
    default: {
      auto out = term_vars(t->a);
      auto more = term_vars(t->b);
      out.insert(more.begin(), more.end());
      return out;
    }
  }
}

std::set<std::string> free_vars(const FormulaPtr& f) {
  using K = Formula::Kind;
  switch (f->kind) {
    case K::Eq:
    case K::In: {
      auto out = term_vars(f->s);
      auto more = term_vars(f->t);
      out.insert(more.begin(), more.end());
      return out;
    }
    case K::Not: return free_vars(f->f);
    case K::And:
    case K::Or:
    case K::Implies:
    case K::Iff: {
      auto out = free_vars(f->f);
      auto more = free_vars(f->g);
      out.insert(more.begin(), more.end());
      return out;
    }
    default: {
      auto out = free_vars(f->f);
      out.erase(f->var);
      auto more = term_vars(f->t);  // bound term never mentions the variable
      out.insert(more.begin(), more.end());
      return out;
    }
  }
}

namespace {

TermPtr subst_term(const TermPtr& t, const std::map<std::string, SValue>& a) {
  switch (t->kind) {
    case Term::Kind::Constant: return t;
    case Term::Kind::Variable: {
      auto it = a.find(t->var);
      return it == a.end() ? t : Term::constant(it->second);
    }
    case Term::Kind::Pair: return Term::pair(subst_term(t->a, a), subst_term(t->b, a));
    case Term::Kind::Apply: return Term::apply(subst_term(t->a, a), subst_term(t->b, a));
  }
  return t;
}

TermPtr rename_term(const TermPtr& t, const std::string& from, const std::string& to) {
  switch (t->kind) {
    case Term::Kind::Constant: return t;
    case Term::Kind::Variable: return t->var == from ? Term::variable(to) : t;
    case Term::Kind::Pair: return Term::pair(rename_term(t->a, from, to), rename_term(t->b, from, to));
    case Term::Kind::Apply:
      return Term::apply(rename_term(t->a, from, to), rename_term(t->b, from, to));
  }
  return t;
}

}  // namespace

FormulaPtr substitute(const FormulaPtr& f, const std::map<std::string, SValue>& a) {
  using K = Formula::Kind;
  switch (f->kind) {
    case K::Eq: return Formula::eq(subst_term(f->s, a), subst_term(f->t, a));
    case K::In: return Formula::in(subst_term(f->s, a), subst_term(f->t, a));
    case K::Not: return Formula::lnot(substitute(f->f, a));
    case K::And: return Formula::land(substitute(f->f, a), substitute(f->g, a));
    case K::Or: return Formula::lor(substitute(f->f, a), substitute(f->g, a));
    case K::Implies: return Formula::implies(substitute(f->f, a), substitute(f->g, a));
    case K::Iff: return Formula::iff(substitute(f->f, a), substitute(f->g, a));
    default: {
      // bound occurrences are untouched: drop the bound variable from the map
      auto inner = a;
      inner.erase(f->var);
      auto body = substitute(f->f, inner);
      auto bound = subst_term(f->t, a);
      if (f->kind == K::Forall) return Formula::forall(f->var, bound, body);
      if (f->kind == K::Exists) return Formula::exists(f->var, bound, body);
      return Formula::exists1(f->var, bound, body);
    }
  }
}

FormulaPtr rename_free(const FormulaPtr& f, const std::string& from, const std::string& to) {
  using K = Formula::Kind;
  switch (f->kind) {
    case K::Eq: return Formula::eq(rename_term(f->s, from, to), rename_term(f->t, from, to));
    case K::In: return Formula::in(rename_term(f->s, from, to), rename_term(f->t, from, to));
    case K::Not: return Formula::lnot(rename_free(f->f, from, to));
    case K::And: return Formula::land(rename_free(f->f, from, to), rename_free(f->g, from, to));
    case K::Or: return Formula::lor(rename_free(f->f, from, to), rename_free(f->g, from, to));
    case K::Implies:
      return Formula::implies(rename_free(f->f, from, to), rename_free(f->g, from, to));
    case K::Iff: return Formula::iff(rename_free(f->f, from, to), rename_free(f->g, from, to));
    default: {
      auto bound = rename_term(f->t, from, to);
      auto body = f->var == from ? f->f : rename_free(f->f, from, to);
      if (f->kind == K::Forall) return Formula::forall(f->var, bound, body);
      if (f->kind == K::Exists) return Formula::exists(f->var, bound, body);
      return Formula::exists1(f->var, bound, body);
    }
  }
}

FormulaPtr alpha_rename(const FormulaPtr& f, const std::string& suffix) {
  using K = Formula::Kind;
  switch (f->kind) {
    case K::Eq:
    case K::In: return f;
    case K::Not: return Formula::lnot(alpha_rename(f->f, suffix));
    case K::And: return Formula::land(alpha_rename(f->f, suffix), alpha_rename(f->g, suffix));
    case K::Or: return Formula::lor(alpha_rename(f->f, suffix), alpha_rename(f->g, suffix));
    case K::Implies:
      return Formula::implies(alpha_rename(f->f, suffix), alpha_rename(f->g, suffix));
    case K::Iff: return Formula::iff(alpha_rename(f->f, suffix), alpha_rename(f->g, suffix));
    default: {
      std::string fresh = f->var + suffix;
      auto body = alpha_rename(rename_free(f->f, f->var, fresh), suffix);
      if (f->kind == K::Forall) return Formula::forall(fresh, f->t, body);
      if (f->kind == K::Exists) return Formula::exists(fresh, f->t, body);
      return Formula::exists1(fresh, f->t, body);
    }
  }
}

FormulaPtr desugar(const FormulaPtr& f) {
  using K = Formula::Kind;
  switch (f->kind) {
    case K::Eq:
    case K::In: return f;
    case K::Not: return Formula::lnot(desugar(f->f));
    case K::And: return Formula::land(desugar(f->f), desugar(f->g));
    case K::Or:  // a or b == not(not a and not b)
      return Formula::lnot(
          Formula::land(Formula::lnot(desugar(f->f)), Formula::lnot(desugar(f->g))));
    case K::Implies:  // a implies b == not(a and not b)
      return Formula::lnot(Formula::land(desugar(f->f), Formula::lnot(desugar(f->g))));
    case K::Iff:
      return desugar(Formula::land(Formula::implies(f->f, f->g), Formula::implies(f->g, f->f)));
    case K::Forall: return Formula::forall(f->var, f->t, desugar(f->f));
    case K::Exists:  // exists x in t : p == not forall x in t : not p
      return Formula::lnot(Formula::forall(f->var, f->t, Formula::lnot(desugar(f->f))));
    case K::Exists1: {
      // exactly one: exists x (p and forall y (p[x:=y] implies y = x))
      std::set<std::string> taken = free_vars(f->f);
      taken.insert(f->var);
      for (const auto& v : term_vars(f->t)) taken.insert(v);
      std::string fresh = "Y";
      while (taken.count(fresh)) fresh += "1";
      auto renamed = rename_free(f->f, f->var, fresh);
      auto unique = Formula::forall(
          fresh, f->t,
          Formula::implies(renamed, Formula::eq(Term::variable(fresh), Term::variable(f->var))));
      return desugar(Formula::exists(f->var, f->t, Formula::land(f->f, unique)));
    }
  }
  return f;
}

// ---------------------------------------------------------------------------
// evaluation

SValue eval_term(const TermPtr& t, const std::map<std::string, SValue>& env,
                 const LogicConfig& cfg) {
  switch (t->kind) {
    case Term::Kind::Constant: return t->value;
    case Term::Kind::Variable: {
      auto it = env.find(t->var);
      if (it == env.end()) throw PreconditionError("unbound variable " + t->var);
      return it->second;
    }
    case Term::Kind::Pair:
      return encode_pair(eval_term(t->a, env, cfg), eval_term(t->b, env, cfg), cfg.encoding,
                         cfg.max_rank);
    case Term::Kind::Apply: {
      SValue f = eval_term(t->a, env, cfg);
      SValue x = eval_term(t->b, env, cfg);
      // f{x} = the unique y with <x,y> in f, otherwise the empty set
      if (!f.is_set()) return SValue::empty_set();
      std::optional<SValue> found;
      for (const auto& w : f.elems()) {
        auto y = pair_second(w, x, cfg.encoding);
        if (!y) continue;
        if (found && !(*found == *y)) return SValue::empty_set();
        found = y;
      }
      return found ? *found : SValue::empty_set();
    }
  }
  throw StructuralError("unreachable term kind");
}

bool eval_env(const FormulaPtr& f, const std::map<std::string, SValue>& env,
              const LogicConfig& cfg) {
  using K = Formula::Kind;
  switch (f->kind) {
    case K::Eq: return eval_term(f->s, env, cfg) == eval_term(f->t, env, cfg);
    case K::In: {
      SValue t = eval_term(f->t, env, cfg);
      if (!t.is_set()) return false;
      return t.contains(eval_term(f->s, env, cfg));
    }
    case K::Not: return !eval_env(f->f, env, cfg);
    case K::And: return eval_env(f->f, env, cfg) && eval_env(f->g, env, cfg);
    case K::Or:
    case K::Implies:
    case K::Iff:
    case K::Exists:
    case K::Exists1: return eval_env(desugar(f), env, cfg);
    case K::Forall: {
      SValue t = eval_term(f->t, env, cfg);
      if (!t.is_set()) return true;  // bound term is no set: vacuously true
      if (!free_vars(f->f).count(f->var)) {
        // vacuous variable: truth of the body, regardless of t's elements
        auto inner = env;
        inner.erase(f->var);
        return eval_env(f->f, inner, cfg);
      }
      for (const auto& v : t.elems()) {
        auto inner = env;
        inner[f->var] = v;
        if (!eval_env(f->f, inner, cfg)) return false;
      }
      return true;
    }
  }
  throw StructuralError("unreachable formula kind");
}

bool eval(const FormulaPtr& f, const LogicConfig& cfg) {
  if (!free_vars(f).empty()) throw PreconditionError("eval requires a statement (no free variables)");
  return eval_env(f, {}, cfg);
}

// ---------------------------------------------------------------------------
// transfer

SValue StarMap::at(const SValue& v) const {
  auto it = map.find(v);
  if (it == map.end()) throw StructuralError("constant outside star map domain: " + v.str());
  return it->second;
}

StarMap StarMap::identity_on(const std::vector<SValue>& values) {
  StarMap s;
  for (const auto& v : values) s.map[v] = v;
  return s;
}

namespace {

void collect_term_constants(const TermPtr& t, std::vector<SValue>& out) {
  switch (t->kind) {
    case Term::Kind::Constant: out.push_back(t->value); return;
    case Term::Kind::Variable: return;
    default:
      collect_term_constants(t->a, out);
      collect_term_constants(t->b, out);
  }
}

TermPtr transfer_term(const TermPtr& t, const StarMap& star) {
  switch (t->kind) {
    case Term::Kind::Constant: return Term::constant(star.at(t->value));
    case Term::Kind::Variable: return t;
    case Term::Kind::Pair: return Term::pair(transfer_term(t->a, star), transfer_term(t->b, star));
    case Term::Kind::Apply:
      return Term::apply(transfer_term(t->a, star), transfer_term(t->b, star));
  }
  return t;
}

}  // namespace

std::vector<SValue> constants_of(const FormulaPtr& f) {
  using K = Formula::Kind;
  std::vector<SValue> out;
  switch (f->kind) {
    case K::Eq:
    case K::In:
      collect_term_constants(f->s, out);
      collect_term_constants(f->t, out);
      break;
    case K::Not: return constants_of(f->f);
    case K::And:
    case K::Or:
    case K::Implies:
    case K::Iff: {
      out = constants_of(f->f);
      auto more = constants_of(f->g);
      out.insert(out.end(), more.begin(), more.end());
      break;
    }
    default: {
      collect_term_constants(f->t, out);
      auto more = constants_of(f->f);
      out.insert(out.end(), more.begin(), more.end());
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

FormulaPtr transfer(const FormulaPtr& f, const StarMap& star) {
  using K = Formula::Kind;
  switch (f->kind) {
    case K::Eq: return Formula::eq(transfer_term(f->s, star), transfer_term(f->t, star));
    case K::In: return Formula::in(transfer_term(f->s, star), transfer_term(f->t, star));
    case K::Not: return Formula::lnot(transfer(f->f, star));
    case K::And: return Formula::land(transfer(f->f, star), transfer(f->g, star));
    case K::Or: return Formula::lor(transfer(f->f, star), transfer(f->g, star));
    case K::Implies: return Formula::implies(transfer(f->f, star), transfer(f->g, star));
    case K::Iff: return Formula::iff(transfer(f->f, star), transfer(f->g, star));
    default: {
      auto bound = transfer_term(f->t, star);
      auto body = transfer(f->f, star);
      if (f->kind == K::Forall) return Formula::forall(f->var, bound, body);
      if (f->kind == K::Exists) return Formula::exists(f->var, bound, body);
      return Formula::exists1(f->var, bound, body);
    }
  }
}

TransferVerdict check_transfer(const FormulaPtr& f, const StarMap& star, const LogicConfig& cfg) {
  TransferVerdict v{};
  v.lhs = eval(f, cfg);
  v.rhs = eval(transfer(f, star), cfg);
  v.agree = v.lhs == v.rhs;
  return v;
}

}  // namespace catstar
