#pragma once

#include <optional>
#include <string>
#include <vector>

#include "catstar/category.hpp"
#include "catstar/modules.hpp"

namespace catstar {

// Additive structure on an explicit category: a triple set over M with
// <f,g,h> meaning h = f + g inside one hom-set. Stored verbatim so corrupted
// candidates can be checked.
struct AdditiveStructure {
  CatPtr cat;
  std::vector<std::array<Mor, 3>> triples;  // sorted, unique

  void canonicalize();
  std::vector<Mor> sums(Mor f, Mor g) const;        // all h with <f,g,h>
  std::optional<Mor> sum(Mor f, Mor g) const;       // unique h, if exactly one
  std::optional<Mor> zero_of(Mor a, Mor b) const;   // neutral element of hom(a,b)
};

struct ClauseReport {
  bool pass = true;
  std::vector<std::string> failures;  // clause-tagged messages with witnesses
  std::vector<std::string> closure_warnings;  // missing sums attributable to the cap
};

// Def-by-def additive check: hom-set group laws, bilinear composition, zero
// object, biproducts (absence reported as closure warnings, not failures).
ClauseReport check_additive(const AdditiveStructure& p);

struct KernelWitness {
  Mor object;     // the kernel object (an identity morphism of cat)
  Mor structure;  // K -> A (or A -> K for cokernels)
};

// Universal-property searches over the whole category; deterministic first
// hit in index order.
std::optional<KernelWitness> kernel_search(const AdditiveStructure& p, Mor f);
std::optional<KernelWitness> cokernel_search(const AdditiveStructure& p, Mor f);

struct AbelianReport {
  ClauseReport additive;
  bool pass = false;
  std::vector<std::string> failures;  // missing kernels/cokernels, coim-im defects
};

// Additive clauses plus kernels, cokernels and the coim -> im isomorphism for
// every morphism.
AbelianReport check_abelian(const AdditiveStructure& p);

// A module fragment presented as an explicit category with its additive
// structure; identities carry the object names, other morphisms are named
// "<A>=><B>#<hom index>".
struct ExplicitModuleCategory {
  AdditiveStructure additive;
  // bookkeeping: explicit morphism -> (source object, target object, hom idx)
  std::map<Mor, std::tuple<int, int, int>> hom_of;
  std::map<Mor, int> object_of;  // explicit identity -> fragment object
};

ExplicitModuleCategory to_explicit_additive(const ModuleFragment& frag);

}  // namespace catstar
