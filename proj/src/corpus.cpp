#include "catstar/corpus.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include "catstar/fixtures.hpp"

namespace catstar::corpus {

namespace {

SValue graph_of(const ExplicitCategory& cat, const CategoryEncoding& enc,
                const std::function<Mor(Mor)>& fn, const LogicConfig& cfg) {
  std::vector<SValue> pairs;
  for (Mor f = 0; f < static_cast<Mor>(cat.size()); ++f)
    pairs.push_back(encode_pair(SValue::base(enc.atom_of.at(f)), SValue::base(enc.atom_of.at(fn(f))),
                                cfg.encoding, cfg.max_rank));
  return SValue::set(std::move(pairs));
}

}  // namespace

CategoryEncoding encode_category(const ExplicitCategory& cat, const std::string& prefix,
                                 Fragment& frag) {
  CategoryEncoding enc;
  enc.prefix = prefix;
  for (Mor f = 0; f < static_cast<Mor>(cat.size()); ++f) {
    std::string atom = prefix + std::to_string(f);
    enc.atom_of[f] = atom;
    frag.base_atoms.push_back(atom);
  }
  const auto& cfg = frag.config;
  std::vector<SValue> morphisms, objects, triples;
  for (Mor f = 0; f < static_cast<Mor>(cat.size()); ++f)
    morphisms.push_back(SValue::base(enc.atom_of.at(f)));
  for (Mor o : cat.objects()) objects.push_back(SValue::base(enc.atom_of.at(o)));
  for (const auto& tr : cat.triples()) {
    auto fg = encode_pair(SValue::base(enc.atom_of.at(tr[0])), SValue::base(enc.atom_of.at(tr[1])),
                          cfg.encoding, cfg.max_rank);
    triples.push_back(encode_pair(fg, SValue::base(enc.atom_of.at(tr[2])), cfg.encoding, cfg.max_rank));
  }
  frag.bindings[prefix + "M"] = SValue::set(std::move(morphisms));
  frag.bindings[prefix + "Ob"] = SValue::set(std::move(objects));
  frag.bindings[prefix + "s"] = graph_of(cat, enc, [&](Mor f) { return cat.src(f); }, cfg);
  frag.bindings[prefix + "t"] = graph_of(cat, enc, [&](Mor f) { return cat.tgt(f); }, cfg);
  frag.bindings[prefix + "c"] = SValue::set(std::move(triples));
  for (Mor f = 0; f < static_cast<Mor>(cat.size()); ++f)
    frag.bindings[enc.atom_of.at(f)] = SValue::base(enc.atom_of.at(f));
  return enc;
}

namespace {

void category_statements(Corpus& out, const ExplicitCategory& cat, const CategoryEncoding& enc,
                         bool include_assoc) {
  const std::string& p = enc.prefix;
  auto item = [&](const std::string& name, const std::string& text) {
    out.items.push_back({p + "-" + name, text});
  };

  // unit laws: composing with the source/target identity returns the morphism
  item("right-unit", "forall F in " + p + "M : pair(pair(F, app(" + p + "s, F)), F) in " + p + "c");
  item("left-unit", "forall F in " + p + "M : pair(pair(app(" + p + "t, F), F), F) in " + p + "c");

  // associativity closure; six nested quantifiers, so only for small fixtures
  if (include_assoc)
    item("associativity",
         "forall F1 in " + p + "M : forall F2 in " + p + "M : forall F3 in " + p +
             "M : forall F12 in " + p + "M : forall F123 in " + p + "M : forall F23 in " + p +
             "M : (((pair(pair(F1, F2), F12) in " + p + "c and pair(pair(F12, F3), F123) in " + p +
             "c) and pair(pair(F2, F3), F23) in " + p + "c) implies pair(pair(F1, F23), F123) in " +
             p + "c)");

  // the object set is exactly the image of the source map
  item("objects-are-source-image",
       "(forall X in " + p + "Ob : exists F in " + p + "M : app(" + p + "s, F) = X and forall F in " +
           p + "M : app(" + p + "s, F) in " + p + "Ob)");

  Mor some_obj = cat.objects().front();
  std::optional<Mor> nonid;
  for (Mor f = 0; f < static_cast<Mor>(cat.size()); ++f)
    if (!cat.is_object(f)) {
      nonid = f;
      break;
    }

  // hom-set membership spelled through s and t
  item("identity-endpoints", "(app(" + p + "s, " + enc.atom_of.at(some_obj) + ") = " +
                          enc.atom_of.at(some_obj) + " and app(" + p + "t, " +
                          enc.atom_of.at(some_obj) + ") = " + enc.atom_of.at(some_obj) + ")");
  if (nonid)
    item("arrow-endpoints",
         "(app(" + p + "s, " + enc.atom_of.at(*nonid) + ") = " + enc.atom_of.at(cat.src(*nonid)) +
             " and app(" + p + "t, " + enc.atom_of.at(*nonid) + ") = " +
             enc.atom_of.at(cat.tgt(*nonid)) + ")");

  // a concrete composition triple
  item("identity-composite", "pair(pair(" + enc.atom_of.at(some_obj) + ", " + enc.atom_of.at(some_obj) +
                             "), " + enc.atom_of.at(some_obj) + ") in " + p + "c");

  // the isomorphism predicate as a bounded formula
  auto iso_formula = [&](Mor f) {
    std::string fa = enc.atom_of.at(f);
    return "exists G in " + p + "M : exists X in " + p + "Ob : exists Y in " + p +
           "Ob : (pair(pair(" + fa + ", G), X) in " + p + "c and pair(pair(G, " + fa + "), Y) in " +
           p + "c)";
  };
  item("identity-is-iso", iso_formula(some_obj));
  if (nonid && !classify_morphism(cat, *nonid).iso)
    item("non-iso-witness", "not " + iso_formula(*nonid));

  // mono/epi cancellation predicates
  auto mono_formula = [&](Mor f) {
    std::string fa = enc.atom_of.at(f);
    return "forall G1 in " + p + "M : forall G2 in " + p + "M : ((exists H in " + p +
           "M : (pair(pair(" + fa + ", G1), H) in " + p + "c and pair(pair(" + fa + ", G2), H) in " +
           p + "c)) implies G1 = G2)";
  };
  auto epi_formula = [&](Mor f) {
    std::string fa = enc.atom_of.at(f);
    return "forall G1 in " + p + "M : forall G2 in " + p + "M : ((exists H in " + p +
           "M : (pair(pair(G1, " + fa + "), H) in " + p + "c and pair(pair(G2, " + fa + "), H) in " +
           p + "c)) implies G1 = G2)";
  };
  Mor probe = nonid.value_or(some_obj);
  auto cls = classify_morphism(cat, probe);
  item(cls.mono ? "mono-cancellation" : "mono-cancellation-fails",
       cls.mono ? mono_formula(probe) : "not " + mono_formula(probe));
  item(cls.epi ? "epi-cancellation" : "epi-cancellation-fails",
       cls.epi ? epi_formula(probe) : "not " + epi_formula(probe));
}

void a10_statements(Corpus& out) {
  auto& frag = out.fragment;
  for (const auto& a : {"a0", "a1", "a2", "a3"}) frag.base_atoms.push_back(a);
  auto atom = [](const char* a) { return SValue::base(a); };
  SValue A = SValue::set({atom("a0"), atom("a1")});
  SValue B = SValue::set({atom("a1"), atom("a2")});
  frag.bindings["setA"] = A;
  frag.bindings["setB"] = B;
  frag.bindings["setU"] = SValue::set({atom("a0"), atom("a1"), atom("a2")});  // A u B
  frag.bindings["setI"] = SValue::set({atom("a1")});                          // A n B
  frag.bindings["setD"] = SValue::set({atom("a0")});                          // A \ B
  const auto& cfg = frag.config;
  std::vector<SValue> prod;
  for (const auto& x : A.elems())
    for (const auto& y : B.elems()) prod.push_back(encode_pair(x, y, cfg.encoding, cfg.max_rank));
  frag.bindings["setP"] = SValue::set(prod);
  frag.bindings["setC"] = SValue::set({atom("a1")});  // {x in A | x in B}
  frag.bindings["powA"] =
      SValue::set({SValue::empty_set(), SValue::set({atom("a0")}), SValue::set({atom("a1")}), A});
  std::vector<SValue> graphs;
  for (const auto& ya : B.elems())
    for (const auto& yb : B.elems())
      graphs.push_back(SValue::set({encode_pair(atom("a0"), ya, cfg.encoding, cfg.max_rank),
                                    encode_pair(atom("a1"), yb, cfg.encoding, cfg.max_rank)}));
  frag.bindings["mapsAB"] = SValue::set(graphs);

  auto item = [&](const std::string& name, const std::string& text) {
    out.items.push_back({name, text});
  };
  item("finite-set-enumeration",
       "(forall X in setA : (X = a0 or X = a1) and (a0 in setA and a1 in setA))");
  item("empty-set", "(forall X in emptyset : not X = X and not a0 in emptyset)");
  item("union",
       "(forall X in setU : (X in setA or X in setB) and (forall X in setA : X in setU and forall "
       "X in setB : X in setU))");
  item("intersection", "forall X in setI : (X in setA and X in setB)");
  item("difference", "forall X in setD : (X in setA and not X in setB)");
  item("ordered-pair", "(pair(a0, a1) in setP and not pair(a1, a0) in setP)");
  item("comprehension",
       "(forall X in setC : (X in setA and X in setB) and forall X in setA : (X in setB implies X "
       "in setC))");
  item("powerset", "forall Z in powA : forall X in Z : X in setA");
  item("function-space", "forall G in mapsAB : forall X in setA : app(G, X) in setB");
  item("application", "forall G in mapsAB : (app(G, a0) in setB and app(G, a2) = emptyset)");
}

}  // namespace

Corpus default_corpus() {
  Corpus out;
  out.fragment.config = LogicConfig{};

  auto wa = fixtures::walking_arrow();
  auto z2 = fixtures::monoid_z2();
  auto dv = fixtures::divisibility(12);
  auto ewa = encode_category(*wa, "w", out.fragment);
  auto ez2 = encode_category(*z2, "z", out.fragment);
  auto edv = encode_category(*dv, "d", out.fragment);
  category_statements(out, *wa, ewa, /*include_assoc=*/true);
  category_statements(out, *z2, ez2, /*include_assoc=*/true);
  category_statements(out, *dv, edv, /*include_assoc=*/false);
  a10_statements(out);
  return out;
}

StarMap identity_star(const Corpus& corpus) {
  std::vector<SValue> values;
  for (const auto& [name, v] : corpus.fragment.bindings) values.push_back(v);
  for (const auto& a : corpus.fragment.base_atoms) values.push_back(SValue::base(a));
  values.push_back(SValue::empty_set());
  return StarMap::identity_on(values);
}

CorpusRunResult run_corpus(const Corpus& corpus, const StarMap& star) {
  CorpusRunResult out;
  for (const auto& item : corpus.items) {
    auto f = parse_formula(item.text, corpus.fragment);
    auto v = check_transfer(f, star, corpus.fragment.config);
    out.items.push_back({item.name, v.agree, v.lhs, v.rhs});
    out.all_agree = out.all_agree && v.agree;
  }
  return out;
}

std::vector<std::pair<std::string, StarMap>> fault_star_maps(const Corpus& corpus) {
  std::vector<std::pair<std::string, StarMap>> out;
  const auto& frag = corpus.fragment;

  {
    StarMap s = identity_star(corpus);
    s.map[SValue::base("a0")] = SValue::base("a1");
    out.emplace_back("collapse-atom", s);
  }
  {
    StarMap s = identity_star(corpus);
    s.map[frag.bindings.at("setA")] = SValue::set({SValue::base("a0")});
    out.emplace_back("drop-element", s);
  }
  {
    StarMap s = identity_star(corpus);
    SValue c = frag.bindings.at("wc");
    std::vector<SValue> rest(c.elems().begin() + 1, c.elems().end());
    s.map[c] = SValue::set(rest);
    out.emplace_back("break-units", s);
  }
  return out;
}

void write_corpus_dir(const Corpus& corpus, const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(fs::path(dir) / "faults");
  {
    std::ofstream f(fs::path(dir) / "fragment.frag");
    f << "# transfer corpus fragment\n";
    f << "maxrank " << corpus.fragment.config.max_rank << "\n";
    f << "encoding "
      << (corpus.fragment.config.encoding == PairEncoding::Flat ? "flat" : "kuratowski") << "\n";
    f << "base";
    for (const auto& a : corpus.fragment.base_atoms) f << " " << a;
    f << "\n";
    for (const auto& [name, v] : corpus.fragment.bindings) {
      if (v.is_base() && v.atom() == name) continue;  // implied by the base line
      f << name << " = " << v.str() << "\n";
    }
  }
  {
    std::ofstream f(fs::path(dir) / "statements.phi");
    f << "# @name <id> lines pair with the formula on the following line\n";
    for (const auto& item : corpus.items) f << "@name " << item.name << "\n" << item.text << "\n";
  }
  for (const auto& [name, star] : fault_star_maps(corpus)) {
    std::ofstream f(fs::path(dir) / "faults" / (name + ".star"));
    f << "identity\n";
    StarMap id = identity_star(corpus);
    for (const auto& [from, to] : star.map)
      if (!(id.map.count(from) && id.map.at(from) == to))
        f << from.str() << " -> " << to.str() << "\n";
  }
}

std::vector<CorpusItem> parse_statements(std::istream& in) {
  std::vector<CorpusItem> items;
  std::string line, pending_name;
  std::size_t anon = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("@name ", 0) == 0) {
      pending_name = line.substr(6);
      continue;
    }
    std::string name = pending_name.empty() ? "stmt" + std::to_string(anon++) : pending_name;
    pending_name.clear();
    items.push_back({name, line});
  }
  return items;
}

Corpus load_corpus_dir(const std::string& dir) {
  namespace fs = std::filesystem;
  Corpus out;
  out.fragment = load_fragment_file((fs::path(dir) / "fragment.frag").string());
  std::ifstream f(fs::path(dir) / "statements.phi");
  if (!f) throw StructuralError("missing statements.phi in " + dir);
  out.items = parse_statements(f);
  return out;
}

StarMap load_star_file(const std::string& path, const Corpus& corpus) {
  std::ifstream in(path);
  if (!in) throw StructuralError("cannot open star file: " + path);
  StarMap star;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    if (line == "identity") {
      star = identity_star(corpus);
      continue;
    }
    auto arrow = line.find("->");
    if (arrow == std::string::npos) throw ParseError("expected '<value> -> <value>'", lineno, 1);
    auto lhs = parse_svalue(line.substr(0, arrow), corpus.fragment.base_atoms);
    auto rhs = parse_svalue(line.substr(arrow + 2), corpus.fragment.base_atoms);
    star.map[lhs] = rhs;
  }
  return star;
}

}  // namespace catstar::corpus
