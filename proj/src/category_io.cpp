#include "catstar/category_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace catstar {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> toks;
  std::string cur;
  for (char ch : line) {
    if (ch == '#') break;
    if (std::isspace(static_cast<unsigned char>(ch))) {
      if (!cur.empty()) toks.push_back(cur), cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) toks.push_back(cur);
  return toks;
}

}  // namespace

CatPtr parse_category(std::istream& in, bool complete) {
  std::vector<std::string> names;
  std::map<std::string, std::string> src, tgt;
  std::vector<std::array<std::string, 3>> comps;
  std::set<std::string> declared;

  auto declare_object = [&](const std::string& o) {
    if (declared.insert(o).second) {
      names.push_back(o);
      src[o] = o;
      tgt[o] = o;
    }
  };

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    if (toks[0] == "obj" && toks.size() == 2) {
      declare_object(toks[1]);
    } else if (toks[0] == "mor" && toks.size() == 6 && toks[2] == ":" && toks[4] == "->") {
      declare_object(toks[3]);
      declare_object(toks[5]);
      if (!declared.insert(toks[1]).second) throw ParseError("duplicate morphism " + toks[1], lineno, 1);
      names.push_back(toks[1]);
      src[toks[1]] = toks[3];
      tgt[toks[1]] = toks[5];
    } else if (toks[0] == "comp" && toks.size() == 5 && toks[3] == "=") {
      comps.push_back({toks[1], toks[2], toks[4]});
    } else {
      throw ParseError("unrecognized declaration '" + (toks.empty() ? "" : toks[0]) + "'", lineno, 1);
    }
  }

  if (complete) {
    std::set<std::array<std::string, 3>> all(comps.begin(), comps.end());
    for (const auto& n : names) {
      all.insert({n, src[n], n});
      all.insert({tgt[n], n, n});
    }
    // associativity fixpoint: <f,g,fg>,<fg,h,fgh>,<g,h,gh> present => add <f,gh,fgh>
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<std::array<std::string, 3>> snapshot(all.begin(), all.end());
      for (const auto& t1 : snapshot)
        for (const auto& t2 : snapshot) {
          if (t2[0] != t1[2]) continue;  // t2 = <fg,h,fgh>
          for (const auto& t3 : snapshot) {
            if (t3[0] != t1[1] || t3[1] != t2[1]) continue;  // t3 = <g,h,gh>
            std::array<std::string, 3> derived{t1[0], t3[2], t2[2]};
            if (all.insert(derived).second) grew = true;
          }
        }
    }
    comps.assign(all.begin(), all.end());
  }

  return ExplicitCategory::make(names, src, tgt, comps);
}

CatPtr parse_category_text(const std::string& text, bool complete) {
  std::istringstream in(text);
  return parse_category(in, complete);
}

CatPtr load_category_file(const std::string& path, bool complete) {
  std::ifstream in(path);
  if (!in) throw StructuralError("cannot open category file: " + path);
  return parse_category(in, complete);
}

std::string print_category(const ExplicitCategory& c) {
  std::ostringstream out;
  for (Mor o : c.objects()) out << "obj " << c.name(o) << "\n";
  for (Mor f = 0; f < static_cast<Mor>(c.size()); ++f) {
    if (c.is_object(f)) continue;
    out << "mor " << c.name(f) << " : " << c.name(c.src(f)) << " -> " << c.name(c.tgt(f)) << "\n";
  }
  for (const auto& tr : c.triples())
    out << "comp " << c.name(tr[0]) << " " << c.name(tr[1]) << " = " << c.name(tr[2]) << "\n";
  return out.str();
}

FunctorTable parse_functor(std::istream& in, CatPtr source, CatPtr target) {
  FunctorTable f{source, target, std::vector<Mor>(source->size(), -1)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    if (toks[0] != "map" || toks.size() != 4 || toks[2] != "->")
      throw ParseError("expected 'map <mor> -> <mor>'", lineno, 1);
    f.action[static_cast<std::size_t>(source->at(toks[1]))] = target->at(toks[3]);
  }
  for (std::size_t i = 0; i < f.action.size(); ++i)
    if (f.action[i] < 0) throw StructuralError("functor action not total: missing " + source->name(static_cast<Mor>(i)));
  return f;
}

FunctorTable load_functor_file(const std::string& path, CatPtr source, CatPtr target) {
  std::ifstream in(path);
  if (!in) throw StructuralError("cannot open functor file: " + path);
  return parse_functor(in, source, target);
}

}  // namespace catstar
