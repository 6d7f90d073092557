#pragma once

#include <string>
#include <vector>

#include "catstar/category.hpp"
#include "catstar/logic.hpp"

namespace catstar::corpus {

// A finite category packaged as superstructure values: morphisms become base
// atoms <prefix>0.., and the fragment binds
//   <prefix>M  : the set of morphism atoms
//   <prefix>Ob : the set of object atoms (image of the source map)
//   <prefix>s, <prefix>t : graphs of the source/target maps (sets of pairs)
//   <prefix>c  : the composition triple set, entries pair(pair(f,g),h)
// plus one constant per morphism (its atom).
struct CategoryEncoding {
  std::string prefix;
  std::map<Mor, std::string> atom_of;
};

CategoryEncoding encode_category(const ExplicitCategory& cat, const std::string& prefix,
                                 Fragment& frag);

struct CorpusItem {
  std::string name;
  std::string text;  // formula over the corpus fragment
};

struct Corpus {
  Fragment fragment;
  std::vector<CorpusItem> items;
};

// The bundled corpus: unit-law, associativity, object-set and iso/mono/epi
// statements over the walking arrow, Div(12) and the Z/2 monoid, plus
// finite-set facts (enumeration, the empty set, boolean operations, ordered
// pairs, comprehension, power sets, function spaces, application).
Corpus default_corpus();

struct CorpusRunItem {
  std::string name;
  bool agree;
  bool lhs, rhs;
};

struct CorpusRunResult {
  std::vector<CorpusRunItem> items;
  bool all_agree = true;
};

StarMap identity_star(const Corpus& corpus);
CorpusRunResult run_corpus(const Corpus& corpus, const StarMap& star);

// Deliberately broken star maps; each yields at least one disagreement on the
// default corpus (collapse an atom, drop a set element, delete a unit triple).
std::vector<std::pair<std::string, StarMap>> fault_star_maps(const Corpus& corpus);

// Directory layout: fragment.frag, statements.phi (@name/formula line pairs),
// faults/<name>.star listing value overrides.
void write_corpus_dir(const Corpus& corpus, const std::string& dir);
Corpus load_corpus_dir(const std::string& dir);
std::vector<CorpusItem> parse_statements(std::istream& in);
// Star file: `identity` directive and/or `<value> -> <value>` override lines.
StarMap load_star_file(const std::string& path, const Corpus& corpus);

}  // namespace catstar::corpus
