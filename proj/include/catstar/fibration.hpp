#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "catstar/additive.hpp"
#include "catstar/category.hpp"
#include "catstar/limits.hpp"
#include "catstar/modules.hpp"
#include "catstar/ring.hpp"

namespace catstar {

struct FibrationData {
  CatPtr total;
  CatPtr base;
  FunctorTable projection;

  bool valid() const {
    return projection.valid() && projection.source == total && projection.target == base;
  }
};

// Objects over s with the morphisms over id_s, as an explicit category.
struct FibreResult {
  CatPtr cat;
  std::map<Mor, Mor> to_total;  // fibre morphism -> total morphism
};
FibreResult fibre(const FibrationData& fib, Mor s);

struct CartesianCheck {
  bool cartesian = true;
  // counterexample: the (x', u, beta) with no unique filler
  std::vector<std::string> witness;
};

// The explicit factorization formula: for every u into tgt(alpha) and every
// base factorization p(u) = p(alpha).beta there is exactly one lift over beta.
CartesianCheck is_cartesian(const FibrationData& fib, Mor alpha);

// Deterministic (least index) cartesian morphism over alpha into y, if any.
std::optional<Mor> cartesian_lift(const FibrationData& fib, Mor alpha, Mor y);

struct FibrationCheck {
  bool ok = true;
  std::optional<std::pair<Mor, Mor>> failing;  // (base morphism, target object)
};
FibrationCheck is_fibration(const FibrationData& fib);

// Group structures on every Hom_f(X, Y): triples <g1,g2,g3> with g3 = g1+g2,
// all three over the same base morphism.
struct HomOverAddition {
  std::vector<std::array<Mor, 3>> triples;

  std::optional<Mor> sum(Mor a, Mor b) const;
};

struct OverBaseReport {
  bool pass = true;
  std::vector<std::string> failures;
};

// Biadditive composition across Hom_f sets plus additive fibres.
OverBaseReport check_additive_over_base(const FibrationData& fib, const HomOverAddition& p);
// Abelian fibres plus Hom_f(-, -) left exact in each variable, tested against
// the short exact sequences of the relevant fibres.
OverBaseReport check_abelian_over_base(const FibrationData& fib, const HomOverAddition& p);

// The category of pairs (R, M) over the given rings with module carriers
// bounded by cap, projected onto the ring category.
struct ModuleFibration {
  FibrationData data;
  HomOverAddition addition;
  std::vector<RingPtr> rings;
  std::vector<std::shared_ptr<ModuleFragment>> fragments;  // one per ring
  std::map<Mor, std::pair<int, int>> object_info;  // total object -> (ring idx, module idx)
};

ModuleFibration build_module_fibration(const std::vector<RingPtr>& rings, int cap);

// Runs the special-limit checklist item(s) on every fibre; kind "all" runs
// the whole checklist.
struct FibreLimitsRow {
  Mor base_object;
  std::vector<SpecialLimitItem> items;
};
std::vector<FibreLimitsRow> fibre_limits(const FibrationData& fib, const std::string& kind);

// Fibration file format: two category files plus `proj <morF> -> <morE>`.
FibrationData parse_fibration(std::istream& proj_lines, CatPtr total, CatPtr base);
FibrationData load_fibration_file(const std::string& proj_path, CatPtr total, CatPtr base);

}  // namespace catstar
