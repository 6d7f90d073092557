#pragma once

#include <iosfwd>
#include <string>

#include "catstar/category.hpp"

namespace catstar {

// Text format, one declaration per line, '#' comments:
//   obj <name>
//   mor <name> : <srcObj> -> <tgtObj>
//   comp <f> <g> = <h>          # h = f.g
// Objects are named by their identity morphisms; objects mentioned in mor
// lines are declared implicitly. With complete=true, unit triples and
// associativity-derived triples are added to the written set.
CatPtr parse_category(std::istream& in, bool complete = false);
CatPtr parse_category_text(const std::string& text, bool complete = false);
CatPtr load_category_file(const std::string& path, bool complete = false);

std::string print_category(const ExplicitCategory& c);

// Functor files: `map <morC> -> <morD>` lines, total on the source.
FunctorTable parse_functor(std::istream& in, CatPtr source, CatPtr target);
FunctorTable load_functor_file(const std::string& path, CatPtr source, CatPtr target);

}  // namespace catstar
