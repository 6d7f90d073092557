#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "catstar/svalue.hpp"

namespace catstar {

struct LogicConfig {
  int max_rank = 6;
  PairEncoding encoding = PairEncoding::Flat;
};

// Named constants available to the parser/evaluator. Identifiers starting
// with an uppercase letter are variables; everything else must resolve here
// (as a binding or a base atom) or be written as a braces literal.
struct Fragment {
  std::vector<std::string> base_atoms;
  std::map<std::string, SValue> bindings;
  LogicConfig config;

  SValue resolve(const std::string& name) const;  // throws StructuralError
  bool knows(const std::string& name) const;
};

// `base b0 b1 ...` and `name = <literal>` lines; '#' comments.
Fragment parse_fragment(std::istream& in);
Fragment load_fragment_file(const std::string& path);

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  enum class Kind { Constant, Variable, Pair, Apply };
  Kind kind;
  SValue value;      // Constant
  std::string var;   // Variable
  TermPtr a, b;      // Pair / Apply

  static TermPtr constant(SValue v);
  static TermPtr variable(std::string name);
  static TermPtr pair(TermPtr x, TermPtr y);
  static TermPtr apply(TermPtr f, TermPtr x);
};

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  enum class Kind {
    Eq, In, Not, And, Forall,          // core
    Or, Implies, Iff, Exists, Exists1  // sugar, desugared before evaluation
  };
  Kind kind;
  TermPtr s, t;         // Eq / In; `t` is also the bound term of quantifiers
  FormulaPtr f, g;      // Not (f), And/Or/... (f,g), quantifier body (f)
  std::string var;      // quantifiers

  static FormulaPtr eq(TermPtr s, TermPtr t);
  static FormulaPtr in(TermPtr s, TermPtr t);
  static FormulaPtr lnot(FormulaPtr f);
  static FormulaPtr land(FormulaPtr f, FormulaPtr g);
  static FormulaPtr lor(FormulaPtr f, FormulaPtr g);
  static FormulaPtr implies(FormulaPtr f, FormulaPtr g);
  static FormulaPtr iff(FormulaPtr f, FormulaPtr g);
  // quantifiers reject a bound term mentioning the bound variable
  static FormulaPtr forall(std::string var, TermPtr t, FormulaPtr body);
  static FormulaPtr exists(std::string var, TermPtr t, FormulaPtr body);
  static FormulaPtr exists1(std::string var, TermPtr t, FormulaPtr body);
};

TermPtr parse_term(const std::string& text, const Fragment& frag);
FormulaPtr parse_formula(const std::string& text, const Fragment& frag);

std::string print_term(const TermPtr& t);
std::string print_formula(const FormulaPtr& f);

bool term_equal(const TermPtr& a, const TermPtr& b);
bool formula_equal(const FormulaPtr& a, const FormulaPtr& b);

std::set<std::string> term_vars(const TermPtr& t);
std::set<std::string> free_vars(const FormulaPtr& f);

// Replaces free occurrences of the mapped variables by constants.
FormulaPtr substitute(const FormulaPtr& f, const std::map<std::string, SValue>& assignment);
// Renames free occurrences of `from` to the variable `to`.
FormulaPtr rename_free(const FormulaPtr& f, const std::string& from, const std::string& to);
// Consistently renames every bound variable (fresh names), for alpha tests.
FormulaPtr alpha_rename(const FormulaPtr& f, const std::string& suffix);

// Rewrites sugar connectives into the not/and/forall core.
FormulaPtr desugar(const FormulaPtr& f);

// Truth of a statement (no free variables).
bool eval(const FormulaPtr& f, const LogicConfig& cfg = {});
// Truth under an environment supplying values for free variables.
bool eval_env(const FormulaPtr& f, const std::map<std::string, SValue>& env,
              const LogicConfig& cfg = {});
SValue eval_term(const TermPtr& t, const std::map<std::string, SValue>& env,
                 const LogicConfig& cfg = {});

// A star map on constants: total on the values it is given.
struct StarMap {
  std::map<SValue, SValue> map;

  SValue at(const SValue& v) const;  // throws StructuralError outside domain
  static StarMap identity_on(const std::vector<SValue>& values);
};

// Collects every constant value occurring in the formula.
std::vector<SValue> constants_of(const FormulaPtr& f);

// Purely syntactic constant replacement.
FormulaPtr transfer(const FormulaPtr& f, const StarMap& star);

struct TransferVerdict {
  bool agree;
  bool lhs, rhs;  // truth of the statement and of its transfer
};

TransferVerdict check_transfer(const FormulaPtr& f, const StarMap& star,
                               const LogicConfig& cfg = {});

}  // namespace catstar
