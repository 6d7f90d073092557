#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "catstar/errors.hpp"

namespace catstar {

// A finite unital ring on carrier {0..n-1}, zero = 0, with explicit tables.
struct FiniteRing {
  std::string name;
  int n = 0;
  int one = 1;
  std::vector<std::vector<int>> add, mul;

  int plus(int a, int b) const { return add[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  int times(int a, int b) const { return mul[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  int neg(int a) const;

  // ring axioms (abelian group, associativity, unit, distributivity)
  std::vector<std::string> validate() const;
};

using RingPtr = std::shared_ptr<const FiniteRing>;

RingPtr ring_cyclic(int m);                    // Z/m
RingPtr ring_gf4();                            // the field with 4 elements
RingPtr ring_product(const FiniteRing& a, const FiniteRing& b);
RingPtr ring_dual_numbers_f2();                // F2[x]/(x^2)

// `ring <name> size <n> [one <k>]` header followed by `add` and `mul` blocks
// of n rows with n entries each.
RingPtr parse_ring(std::istream& in);
RingPtr load_ring_file(const std::string& path);
// builtin names: Z2, Z3, Z4, Z6, F2, F3, F4, Z2xZ2, F2eps
RingPtr builtin_ring(const std::string& name);

// Unital ring homomorphisms a -> b as value tables, in lexicographic order.
std::vector<std::vector<int>> ring_homs(const FiniteRing& a, const FiniteRing& b);

// Is Z/m a field: every nonzero element has a verified inverse; returns a
// zero-divisor pair as the counterexample otherwise.
struct FieldCheck {
  bool is_field;
  std::optional<std::pair<long long, long long>> zero_divisor;
};
FieldCheck residue_field_check(long long m);

}  // namespace catstar
