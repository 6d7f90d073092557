#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "catstar/category.hpp"
#include "catstar/ring.hpp"

namespace catstar {

// A finite module over a finite (commutative) ring: an abelian group in
// invariant-factor form with carrier {0..n-1} in mixed radix, plus an action
// table act[r][x].
struct Module {
  RingPtr ring;
  std::vector<int> factors;  // d1 | d2 | ... ; empty = zero module
  std::vector<std::vector<int>> act;
  std::string name;

  int size() const;
  int add(int x, int y) const;
  int neg(int x) const;
  int smul(int r, int x) const { return act[static_cast<std::size_t>(r)][static_cast<std::size_t>(x)]; }
  std::vector<int> decode(int x) const;
  int encode(const std::vector<int>& digits) const;
  std::vector<int> generators() const;  // one per factor
};

// Cyclic Z/m with the natural action of the ring (ring characteristic must
// kill m).
Module cyclic_module(RingPtr ring, int m, const std::string& name = "");
Module zero_module(RingPtr ring);

// All R-linear maps a -> b as full value tables, lexicographic by generator
// images.
std::vector<std::vector<int>> module_homs(const Module& a, const Module& b);
bool is_linear_map(const Module& a, const Module& b, const std::vector<int>& map);

// A morphism inside a fragment: source/target object indices plus the table.
struct ModHom {
  int src = -1, dst = -1;
  std::vector<int> map;

  bool operator==(const ModHom& o) const { return src == o.src && dst == o.dst && map == o.map; }
};

// The lazily materialized category of R-modules with carriers of size <= cap,
// one canonical representative per isomorphism class. Hom-sets are memoized;
// the memo table is a pure cache guarded by a mutex.
class ModuleFragment {
 public:
  ModuleFragment(RingPtr ring, int cap);

  const RingPtr& ring() const { return ring_; }
  int cap() const { return cap_; }
  const std::vector<Module>& objects() const { return objects_; }
  const Module& object(int i) const { return objects_[static_cast<std::size_t>(i)]; }
  int object_count() const { return static_cast<int>(objects_.size()); }
  int find_object(const std::string& name) const;  // throws StructuralError
  int zero_object() const { return zero_; }

  const std::vector<std::vector<int>>& homs(int a, int b) const;
  int hom_index(const ModHom& h) const;  // position of h.map in homs(src,dst)

  ModHom identity(int a) const;
  ModHom zero_hom(int a, int b) const;
  ModHom compose(const ModHom& g, const ModHom& f) const;  // g after f
  ModHom add_homs(const ModHom& f, const ModHom& g) const;
  bool is_mono(const ModHom& f) const;  // injective table
  bool is_epi(const ModHom& f) const;   // surjective table

  struct Biproduct {
    int object;
    ModHom i1, i2, p1, p2;
  };
  // Throws CapExceededError when |A||B| > cap.
  Biproduct biproduct(int a, int b) const;

  // An abstract finite module presented by tables, to be matched against the
  // fragment's canonical representatives.
  struct Abstract {
    int n = 0;
    std::function<int(int, int)> add;
    std::function<int(int, int)> smul;  // (ring element, x)
  };
  struct Classified {
    int object;
    std::vector<int> iso;      // abstract element -> carrier of object? no: object carrier -> abstract
  };
  // Finds the canonical object isomorphic to the abstract module and an
  // isomorphism carrier(object) -> abstract elements. Deterministic.
  Classified classify(const Abstract& abs) const;

  // kernel/cokernel/image/coimage with their structure morphisms; universal
  // properties hold by construction and are verified exhaustively in tests.
  struct UniversalMap {
    int object;
    ModHom structure;  // kernel/image: object -> src/dst; cokernel/coimage: -> object
  };
  UniversalMap kernel(const ModHom& f) const;
  UniversalMap cokernel(const ModHom& f) const;
  UniversalMap image(const ModHom& f) const;    // kernel of the cokernel
  UniversalMap coimage(const ModHom& f) const;  // cokernel of the kernel

  std::vector<int> kernel_set(const ModHom& f) const;
  std::vector<int> image_set(const ModHom& f) const;

  // exactness at every inner joint of a composable chain
  std::vector<bool> exactness(const std::vector<ModHom>& chain) const;

 private:
  RingPtr ring_;
  int cap_;
  std::vector<Module> objects_;
  int zero_ = 0;
  mutable std::map<std::pair<int, int>, std::vector<std::vector<int>>> hom_memo_;
  mutable std::mutex memo_mu_;
};

// A functor between module fragments with explicit object map and hom action.
struct ModuleFunctor {
  const ModuleFragment* source = nullptr;
  const ModuleFragment* target = nullptr;
  std::string name;
  std::vector<int> obj_map;
  std::function<ModHom(const ModHom&)> on_hom;
};

ModuleFunctor identity_module_functor(const ModuleFragment& frag);
// Mor(N, -): values classified to canonical representatives.
ModuleFunctor hom_functor(const ModuleFragment& frag, int n_obj);
// - (+) N into a roomier fragment over the same ring (same enumeration
// order, so source objects are a prefix of the target's); n_obj indexes the
// target fragment.
ModuleFunctor sum_functor(const ModuleFragment& source, const ModuleFragment& target, int n_obj);

enum class ExactnessClass { NotAdditive, AdditiveOnly, LeftExact, RightExact, Exact };
std::string to_string(ExactnessClass c);

// Kernel preservation, epi preservation, zero/biproduct preservation.
ExactnessClass functor_exactness(const ModuleFunctor& f);

// Mor(-, I) turns monomorphisms into surjections of hom-sets.
bool is_injective(const ModuleFragment& frag, int i_obj);

struct EnoughInjectivesReport {
  bool ok = true;
  std::vector<std::pair<int, ModHom>> embeddings;  // object -> mono into an injective
  std::vector<int> failures;
};
EnoughInjectivesReport has_enough_injectives(const ModuleFragment& frag);

struct ResolutionData {
  int object;                 // the resolved object A
  ModHom augmentation;        // A -> I^0
  std::vector<int> terms;     // I^0, I^1, ...
  std::vector<ModHom> diffs;  // d^i : I^i -> I^{i+1}, one per consecutive pair
};

// Deterministic: smallest injective container by size then name, least mono,
// repeated on cokernels. Throws when no injective container exists.
ResolutionData injective_resolution(const ModuleFragment& frag, int a_obj, int length);

// R^i F A via an injective resolution of length i+1.
int derived_functor(const ModuleFragment& frag, const ModuleFunctor& f, int a_obj, int i);
int derived_functor_on(const ModuleFunctor& f, const ResolutionData& res, int i);

struct ComplexWindow {
  const ModuleFragment* frag = nullptr;
  int lo = 0;                 // degree of objects.front()
  std::vector<int> objects;   // per degree
  std::vector<ModHom> diffs;  // diffs[k] : objects[k] -> objects[k+1]
};

// Validates shape and d.d = 0; throws on failure.
ComplexWindow make_complex(const ModuleFragment& frag, int lo, std::vector<int> objects,
                           std::vector<ModHom> diffs);
// h^i = ker d_i / im d_{i-1}; degrees outside the window count as zero.
int cohomology(const ComplexWindow& cx, int degree);

struct ChainMap {
  const ComplexWindow* src = nullptr;
  const ComplexWindow* dst = nullptr;
  std::vector<ModHom> components;  // per degree of the shared window
};

bool chain_map_valid(const ChainMap& m);
bool is_quasi_iso(const ChainMap& m);

// Mor(R-as-module, -) with the module structure transported through psi:
// carrier(rr_obj) -> ring elements. Verifies exactness, full faithfulness and
// biproduct compatibility; throws PreconditionError if psi is not an
// isomorphism of modules.
struct HomModuleFunctorReport {
  ModuleFunctor functor;
  bool exact = false, fully_faithful = false, preserves_biproducts = false;
};
HomModuleFunctorReport hom_module_functor(const ModuleFragment& frag, int rr_obj,
                                          const std::vector<int>& psi);

// Summand closure of a set of fragment objects (biproducts within cap).
bool is_thick(const ModuleFragment& frag, const std::vector<int>& sub_objects);

}  // namespace catstar
