#pragma once

#include "catstar/category.hpp"

namespace catstar::fixtures {

// The one-object, one-morphism category.
CatPtr terminal();

// Two objects a, b and one arrow f : a -> b.
CatPtr walking_arrow();

// Divisors of n ordered by divisibility; arrow "m|k" : m -> k when m divides k.
// Objects are named "d<m>".
CatPtr divisibility(int n);

// One object with morphism group Z/2 = {e, g}.
CatPtr monoid_z2();

// All subsets of {0,1} and all functions between them. Objects are named
// s0 (empty), s1 ({0}), s2 ({1}), s3 ({0,1}); a function f with graph
// f(i)=j_i is named "f<obj>_<obj>_<values>".
CatPtr finset_trunc();

// Discrete category on the given object names.
CatPtr discrete(const std::vector<std::string>& objects);

// Parallel pair: objects a, b and two arrows u, v : a -> b.
CatPtr parallel_pair();

// Cospan index: x -> z <- y.
CatPtr cospan_index();

// Span index: x <- z -> y.
CatPtr span_index();

// Empty category.
CatPtr empty();

// Chain poset 0 <- 1 <- ... <- n-1 (arrows point toward smaller stages),
// objects "n0".."n<k>", morphism "p<i>_<j>" : ni -> nj for i > j.
CatPtr chain_projections(int stages);

}  // namespace catstar::fixtures
