#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "catstar/filtered.hpp"
#include "catstar/logic.hpp"
#include "catstar/modules.hpp"
#include "catstar/ring.hpp"

namespace catstar {

// A trusted assertion attached by a builder: every component from `from` on
// satisfies the named property. The window evaluator never claims a cofinite
// verdict without one.
struct TailCertificate {
  std::string property;  // "constant", "monotone-increasing", "prime", ...
  std::size_t from = 0;
};

// An internal element of the reduced-power model: an eventually-defined
// component sequence. Generators must be pure (same index, same value).
template <class T>
struct Sequence {
  std::string name;
  std::function<T(std::size_t)> gen;
  std::size_t defined_from = 0;
  std::vector<TailCertificate> certificates;

  T at(std::size_t n) const {
    if (n < defined_from)
      throw PreconditionError("component " + std::to_string(n) + " of " + name + " undefined");
    return gen(n);
  }
  std::optional<std::size_t> cert_from(const std::string& property) const {
    for (const auto& c : certificates)
      if (c.property == property) return c.from;
    return std::nullopt;
  }
};

using InternalValue = Sequence<SValue>;
using InternalInt = Sequence<long long>;

enum class VerdictKind { True, False, Undecided };

struct Verdict {
  VerdictKind kind = VerdictKind::Undecided;
  std::size_t window_begin = 0, window_end = 0;
  std::size_t true_count = 0, false_count = 0;
  std::optional<std::size_t> first_true, first_false;
  bool certified = false;
  std::string certificate;  // the rule justifying a certified verdict
};

std::string to_string(VerdictKind k);

// builders
InternalValue star_const(const SValue& v);
InternalInt star_const_int(long long v, const std::string& name = "");
InternalInt omega();            // component n = n
InternalInt nth_prime();        // components 2, 3, 5, 7, ...
InternalInt factorial_seq();    // component n = n!
InternalInt custom_int(const std::string& name, std::function<long long(std::size_t)> gen,
                       std::size_t defined_from = 0, std::vector<TailCertificate> certs = {});
// view an integer sequence inside the superstructure (decimal atoms)
InternalValue as_values(const InternalInt& s);

// Componentwise truth of a formula whose free variables are bound to internal
// elements. True/False only under a covering certificate; otherwise Undecided
// with statistics. Throws if the window does not reach past every
// defined_from.
Verdict eval_on_window(const FormulaPtr& phi, const std::map<std::string, InternalValue>& binds,
                       std::size_t window, const LogicConfig& cfg = {});

// --- numeric predicate language -------------------------------------------
// numterm := INT | IDENT
// pred    := numterm (= | < | <= | > | >=) numterm
//          | is_prime(numterm) | even(numterm) | odd(numterm)
//          | not pred | "(" pred (and | or) pred ")"
struct NumFormula;
using NumFormulaPtr = std::shared_ptr<const NumFormula>;

struct NumTerm {
  bool is_const = true;
  long long value = 0;
  std::string slot;
};

struct NumFormula {
  enum class Kind { Cmp, IsPrime, Even, Odd, Not, And, Or } kind;
  std::string cmp;  // "=", "<", "<=", ">", ">="
  NumTerm a, b;
  NumFormulaPtr f, g;
};

NumFormulaPtr parse_num_formula(const std::string& text);
bool eval_num_at(const NumFormulaPtr& p, const std::map<std::string, InternalInt>& binds,
                 std::size_t n);
Verdict eval_num_on_window(const NumFormulaPtr& p, const std::map<std::string, InternalInt>& binds,
                           std::size_t window);

// --- residue towers ---------------------------------------------------------
struct ResidueComponent {
  long long modulus;
  bool is_field;
  std::optional<std::pair<long long, long long>> zero_divisor;
};

// Lazily enumerated tower of rings Z/P_n with per-component field checks by
// unit enumeration; the aggregate verdict is certified only through the
// modulus sequence's certificates.
struct ResidueTower {
  InternalInt moduli;

  ResidueComponent component(std::size_t n) const;
  Verdict field_verdict(std::size_t window) const;
};

ResidueTower residue_tower(const InternalInt& p);

// --- explicit towers for the hyper-cone and the limit correspondence -------
struct ModuleTower {
  CatPtr index;                            // finite cofiltered category
  std::vector<FiniteSubsystem> exhaustion;  // monotone; the last covers the index
  std::map<Mor, Module> values;            // per index object
  std::map<Mor, std::vector<int>> links;   // per index morphism, additive maps

  void validate() const;  // shape, functoriality, exhaustion coverage
};

struct RingTower {
  CatPtr index;
  std::vector<FiniteSubsystem> exhaustion;
  std::map<Mor, FiniteRing> values;
  std::map<Mor, std::vector<int>> links;  // unital ring homs
};

// stages Z/p^1, ..., Z/p^depth with reduction links, exhausted stage by stage
ModuleTower power_tower(int p, int depth);

struct HyperCone {
  Sequence<std::string> apex;  // component n = the apex object of the n-th cone
  std::map<std::string, Sequence<std::string>> projections;  // per standard object
};

// component n of the pro-point is finite_subsystem_cone(J_n).apex; the
// projection at a standard object is defined from the first stage containing
// it. Triangles commute at every defined index.
HyperCone hyper_cone(CatPtr index, const std::vector<FiniteSubsystem>& exhaustion);
HyperCone hyper_cone(const ModuleTower& t);

struct CorrespondenceReport {
  std::size_t families = 0;  // compatible families of hom(X, G i)
  std::size_t classes = 0;   // window classes of hom sequences into the apexes
  bool bijective = false;
  std::size_t covered_objects = 0;  // objects of the last window subsystem
};

// Compares lim hom(X, G(n)) with the classes of windowed hom-sequences
// through the hyper-cone apexes (morphisms identified when every standard
// projection equalizes them).
CorrespondenceReport limit_correspondence(const Module& x, const ModuleTower& t,
                                          std::size_t window);
CorrespondenceReport limit_correspondence_rings(const FiniteRing& x, const RingTower& t,
                                                std::size_t window);

// Tower files: `stage <n> = Z/<m>` and `link <a> -> <b> : mod` (reduction) or
// `link <a> -> <b> : mul <k>`.
ModuleTower load_module_tower_file(const std::string& path);

}  // namespace catstar
