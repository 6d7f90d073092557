#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "catstar/category.hpp"
#include "catstar/limits.hpp"

namespace catstar {

enum class Direction { Filtered, Cofiltered };

struct FilteredCheck {
  bool ok = false;
  std::string reason;                       // "empty", "pair", "parallel" on failure
  std::vector<std::string> counterexample;  // the failing pair
};

// Nonempty, every pair of objects admits a (co)cone, and every parallel pair
// is (co)equalized by some morphism.
FilteredCheck is_filtered(const ExplicitCategory& cat, Direction dir);

// A finite selection of objects and morphisms; not necessarily a subcategory.
struct FiniteSubsystem {
  std::vector<Mor> objects;
  std::vector<Mor> morphisms;

  void validate(const ExplicitCategory& cat) const;  // endpoints inside objects
};

struct ConeOverSubsystem {
  Mor apex;
  std::map<Mor, Mor> projections;  // object j of the subsystem -> apex -> j
};

// The inductive construction: object steps via spans, morphism steps via an
// equalizing morphism, scanning candidates in lexicographic order. Requires a
// cofiltered category.
ConeOverSubsystem finite_subsystem_cone(const ExplicitCategory& cat, const FiniteSubsystem& j);

// A covariant set-valued diagram with explicit value sets and component maps.
struct SetDiagram {
  CatPtr index;
  std::map<Mor, std::vector<std::string>> values;            // per object
  std::map<Mor, std::map<std::string, std::string>> action;  // per morphism

  bool valid() const;
};

// All families (x_i) with action(phi)(x_i) = x_j for every phi : i -> j.
std::vector<std::map<Mor, std::string>> compatible_families(const SetDiagram& d);

struct LimitViaConeReport {
  // per test object X of the target: family count, class count, bijection flag
  struct PerObject {
    Mor object;
    std::size_t families = 0;
    std::size_t classes = 0;
    bool bijective = false;
  };
  std::vector<PerObject> rows;
  bool all_bijective = false;
};

// For a diagram G : I -> C and a cone over the *whole* finite index (apex in
// I), verifies for every X the bijection between compatible families of
// hom(X, G i) and hom(X, G apex) modulo the relation identifying morphisms
// with equal projections to every stage.
LimitViaConeReport limit_via_cone(const DiagramTable& d, const ConeOverSubsystem& cone);

// Subsystem file format: `objects: a b c` / `morphisms: f g` lines.
FiniteSubsystem parse_subsystem(std::istream& in, const ExplicitCategory& cat);
FiniteSubsystem load_subsystem_file(const std::string& path, const ExplicitCategory& cat);

}  // namespace catstar
