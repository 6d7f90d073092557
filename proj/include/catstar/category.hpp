#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "catstar/errors.hpp"

namespace catstar {

// Morphism handle: index into the category's name table.
using Mor = int;

class ExplicitCategory;
using CatPtr = std::shared_ptr<const ExplicitCategory>;

inline constexpr std::size_t kDefaultMorphismCap = 10000;

// A finite category as a quadruple: a morphism set M, source and target maps
// s,t : M -> M, and a composition triple set c of entries <f,g,h> meaning
// h = f.g (f after g). Objects are not stored separately; they are the
// identity morphisms, i.e. the image of s.
//
// The triple set is kept verbatim so that invalid candidates (missing units,
// ambiguous composites) can be represented and fed to check_axioms. Triples
// that referenced unknown morphism names at construction are preserved in
// unresolved() for structural reporting.
class ExplicitCategory {
 public:
  // Names are interned in sorted order; src/tgt must be total on the names.
  static CatPtr make(const std::vector<std::string>& names,
                     const std::map<std::string, std::string>& src,
                     const std::map<std::string, std::string>& tgt,
                     const std::vector<std::array<std::string, 3>>& comps);

  // Index-level factory; caller guarantees src/tgt/triples are in range.
  static CatPtr make_indexed(std::vector<std::string> names, std::vector<Mor> src,
                             std::vector<Mor> tgt, std::vector<std::array<Mor, 3>> triples);

  std::size_t size() const { return names_.size(); }
  const std::string& name(Mor f) const { return names_[static_cast<std::size_t>(f)]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Mor> find(std::string_view name) const;
  Mor at(std::string_view name) const;  // throws StructuralError if missing

  Mor src(Mor f) const { return src_[static_cast<std::size_t>(f)]; }
  Mor tgt(Mor f) const { return tgt_[static_cast<std::size_t>(f)]; }
  const std::vector<std::array<Mor, 3>>& triples() const { return triples_; }
  const std::vector<std::array<std::string, 3>>& unresolved() const { return unresolved_; }

  // Objects are the image of s, sorted.
  const std::vector<Mor>& objects() const { return objects_; }
  bool is_object(Mor f) const { return src(f) == f && tgt(f) == f; }

  std::vector<Mor> hom(Mor x, Mor y) const;
  const std::vector<Mor>& with_source(Mor x) const;
  const std::vector<Mor>& with_target(Mor y) const;

  // The unique h with <f,g,h> in c, if exactly one exists.
  std::optional<Mor> compose(Mor f, Mor g) const;
  // All h with <f,g,h> in c (for axiom checking on invalid candidates).
  std::vector<Mor> composites(Mor f, Mor g) const;
  bool has_triple(Mor f, Mor g, Mor h) const;

  bool operator==(const ExplicitCategory& other) const;

 private:
  ExplicitCategory() = default;

  std::vector<std::string> names_;
  std::vector<Mor> src_, tgt_;
  std::vector<std::array<Mor, 3>> triples_;                 // sorted, unique
  std::vector<std::array<std::string, 3>> unresolved_;      // triples with unknown names
  std::vector<Mor> objects_;
  std::map<std::pair<Mor, Mor>, std::vector<Mor>> comp_index_;
  std::map<Mor, std::vector<Mor>> by_src_, by_tgt_;
};

struct AxiomViolation {
  std::string clause;                 // "ii-ss", "ii-ts", "ii-st", "ii-tt",
                                      // "iii-1", "iii-2-none", "iii-2-multi", "iv", "v"
  std::vector<std::string> witness;   // offending morphism names
  std::string detail;
};

struct ValidationReport {
  std::vector<std::string> structural;       // malformed-input findings
  std::vector<AxiomViolation> violations;
  bool pass() const { return structural.empty() && violations.empty(); }
};

// Checks the five quadruple axioms and reports every violation with a witness.
ValidationReport check_axioms(const ExplicitCategory& cat);

// A functor between explicit categories: a total map on morphisms commuting
// with s and t and sending composition triples to composition triples.
struct FunctorTable {
  CatPtr source, target;
  std::vector<Mor> action;

  Mor operator()(Mor f) const { return action[static_cast<std::size_t>(f)]; }
  bool valid() const;
  bool operator==(const FunctorTable& other) const;
};

FunctorTable identity_functor(CatPtr c);
// g after f (first f, then g); sources/targets must line up.
FunctorTable compose_functors(const FunctorTable& g, const FunctorTable& f);

// A natural transformation F => G given by one target morphism per source
// object (components indexed by position in source->objects()).
struct NatTransTable {
  FunctorTable F, G;
  std::vector<Mor> components;

  Mor at_object(Mor x) const;
  bool valid() const;
};

// Object/hom presentation of a category (the conventional encoding).
struct ObjHomCategory {
  std::vector<std::string> objects;
  std::map<std::pair<std::string, std::string>, std::vector<std::string>> hom;
  std::map<std::string, std::string> identities;
  // (f,g) -> f.g for composable pairs
  std::map<std::pair<std::string, std::string>, std::string> compose;
};

// Disjoint-union construction: morphisms keep their names, objects become
// their identity morphisms. Rejects non-disjoint hom-sets.
CatPtr from_obj_hom(const ObjHomCategory& d);
ObjHomCategory to_obj_hom(const ExplicitCategory& c);

CatPtr opposite(const ExplicitCategory& c);
CatPtr product(const ExplicitCategory& a, const ExplicitCategory& b);

struct FunctorCategoryResult {
  CatPtr cat;
  std::vector<FunctorTable> functors;       // functors[i] is the i-th object "F<i>"
  std::vector<NatTransTable> transforms;    // one entry per morphism of cat
};

// Funct(C, D): objects are all maps satisfying the functor conditions,
// morphisms all natural families. Throws CapExceededError when the result
// would exceed `cap` morphisms.
FunctorCategoryResult functor_category(CatPtr c, CatPtr d, std::size_t cap = kDefaultMorphismCap);

struct SliceResult {
  CatPtr cat;
  std::map<Mor, Mor> object_of;   // slice object -> morphism of c into X
  std::map<Mor, Mor> underlying;  // slice morphism -> underlying morphism of c
};

// C/X: objects are morphisms a : Y -> X, a morphism (A,a) -> (B,b) is a
// morphism g : A -> B of C with b.g = a.
SliceResult slice(CatPtr c, Mor x);

// Full subcategory on the given objects (morphisms with both endpoints inside).
CatPtr full_subcategory(const ExplicitCategory& c, const std::vector<Mor>& objs);

// sub must be a full subcategory of slice_cat (checked; rejected otherwise).
// True iff sub's object set is downward closed in slice_cat.
bool is_sieve(const ExplicitCategory& slice_cat, const ExplicitCategory& sub);

struct MorphismClass {
  bool iso = false, mono = false, epi = false;
};

// Exhaustive iso/mono/epi classification by searching for a two-sided inverse
// and testing cancellation against all composable pairs.
MorphismClass classify_morphism(const ExplicitCategory& c, Mor f);

// Isomorphism-of-categories search over name bijections, deterministic
// (lexicographically least assignment when several exist).
std::optional<std::map<Mor, Mor>> find_isomorphism(const ExplicitCategory& a,
                                                   const ExplicitCategory& b);

}  // namespace catstar
