#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "catstar/category.hpp"

namespace catstar {

// A presheaf on `base` with explicit finite value sets: values per object and
// a restriction function per morphism, contravariantly (restriction of
// f : Y -> X maps values(X) into values(Y)).
struct PresheafTable {
  CatPtr base;
  std::map<Mor, std::vector<std::string>> values;
  std::map<Mor, std::map<std::string, std::string>> restriction;

  // functoriality: identities restrict to identities, composites compose
  bool valid() const;
};

PresheafTable yoneda_presheaf(CatPtr cat, Mor x);

struct NatIsoWitness {
  Mor object;                                            // representing object
  std::map<Mor, std::map<std::string, std::string>> to_hom;  // values(Y) -> hom(Y, X)
};

// Searches all objects and all natural bijection families.
std::optional<NatIsoWitness> is_representable(const PresheafTable& p);

struct DiagramTable {
  CatPtr index;
  CatPtr target;
  FunctorTable functor;

  bool valid() const { return functor.valid() && functor.source == index && functor.target == target; }
};

struct ConeWitness {
  Mor apex;
  std::map<Mor, Mor> legs;  // index object -> target morphism with source apex
};

struct LimitResult {
  ConeWitness cone;
  // every cone paired with its unique mediating morphism into the apex
  std::vector<std::pair<ConeWitness, Mor>> mediators;
};

// Terminal cone over the diagram, if one exists. Deterministic tie-break:
// lexicographically least apex name, then least leg tuple. Empty diagrams are
// allowed (limit over the empty index is a final object).
std::optional<LimitResult> limit(const DiagramTable& d);
// Initial cocone, dually; legs have target apex.
std::optional<LimitResult> colimit(const DiagramTable& d);

// Enumerates every cone over the diagram (used by limit; exposed for tests).
std::vector<ConeWitness> enumerate_cones(const DiagramTable& d);

struct SpecialLimitItem {
  std::string kind;
  bool has = false;
  std::string witness;         // description of the witness object/cone
  std::string counterexample;  // description of a diagram with no (co)limit
};

// Checklist: initial, final, zero object; binary products/coproducts;
// fibred products/sums; difference kernels/cokernels.
std::vector<SpecialLimitItem> special_limits(CatPtr cat);

struct AdjunctionWitness {
  std::vector<Mor> unit;    // components of eta : Id -> G.F over Ob(C)
  std::vector<Mor> counit;  // components of eps : F.G -> Id over Ob(D)
};

// Exhaustive search for (eta, eps) satisfying both triangle identities;
// first pair in lexicographic component order, or nullopt. Throws
// CapExceededError when the candidate space exceeds `cap` explored families.
std::optional<AdjunctionWitness> find_adjunction(const FunctorTable& f, const FunctorTable& g,
                                                 std::size_t cap = 2000000);

// All natural transformations F => G, lexicographic by component tuple.
std::vector<NatTransTable> enumerate_nat_trans(const FunctorTable& f, const FunctorTable& g,
                                               std::size_t cap = 2000000);

}  // namespace catstar
