#include "catstar/fixtures.hpp"

#include <functional>

namespace catstar::fixtures {

namespace {

// Builds a thin category from a reflexive-transitive relation: one arrow
// x -> y whenever rel(x,y). Composition is forced.
CatPtr thin_category(const std::vector<std::string>& objects,
                     const std::function<bool(std::size_t, std::size_t)>& rel,
                     const std::function<std::string(std::size_t, std::size_t)>& arrow_name) {
  std::vector<std::string> names;
  std::map<std::string, std::string> src, tgt;
  auto nm = [&](std::size_t i, std::size_t j) {
    return i == j ? objects[i] : arrow_name(i, j);
  };
  for (std::size_t i = 0; i < objects.size(); ++i)
    for (std::size_t j = 0; j < objects.size(); ++j) {
      if (i != j && !rel(i, j)) continue;
      names.push_back(nm(i, j));
      src[nm(i, j)] = objects[i];
      tgt[nm(i, j)] = objects[j];
    }
  std::vector<std::array<std::string, 3>> comps;
  for (std::size_t i = 0; i < objects.size(); ++i)
    for (std::size_t j = 0; j < objects.size(); ++j) {
      if (i != j && !rel(i, j)) continue;
      for (std::size_t k = 0; k < objects.size(); ++k) {
        if (j != k && !rel(j, k)) continue;
        // <f: j->k, g: i->j, h: i->k>
        comps.push_back({nm(j, k), nm(i, j), nm(i, k)});
      }
    }
  return ExplicitCategory::make(names, src, tgt, comps);
}

}  // namespace

CatPtr terminal() { return thin_category({"*"}, [](std::size_t, std::size_t) { return false; },
                                         [](std::size_t, std::size_t) { return ""; }); }

CatPtr walking_arrow() {
  return thin_category({"a", "b"}, [](std::size_t i, std::size_t j) { return i == 0 && j == 1; },
                       [](std::size_t, std::size_t) { return "f"; });
}

CatPtr divisibility(int n) {
  std::vector<int> divs;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) divs.push_back(d);
  std::vector<std::string> objects;
  for (int d : divs) objects.push_back("d" + std::to_string(d));
  return thin_category(
      objects, [&](std::size_t i, std::size_t j) { return divs[j] % divs[i] == 0; },
      [&](std::size_t i, std::size_t j) {
        return "d" + std::to_string(divs[i]) + "|d" + std::to_string(divs[j]);
      });
}

CatPtr monoid_z2() {
  std::vector<std::string> names{"e", "g"};
  std::map<std::string, std::string> src{{"e", "e"}, {"g", "e"}}, tgt = src;
  std::vector<std::array<std::string, 3>> comps{
      {"e", "e", "e"}, {"e", "g", "g"}, {"g", "e", "g"}, {"g", "g", "e"}};
  return ExplicitCategory::make(names, src, tgt, comps);
}

CatPtr finset_trunc() {
  // subsets of {0,1} encoded as bitmasks 0..3
  auto elems = [](int s) {
    std::vector<int> out;
    for (int e = 0; e < 2; ++e)
      if (s & (1 << e)) out.push_back(e);
    return out;
  };
  std::vector<std::string> obj(4);
  for (int s = 0; s < 4; ++s) obj[static_cast<std::size_t>(s)] = "s" + std::to_string(s);

  struct Fn {
    int a, b;
    std::vector<int> val;  // val[i] = image of i-th element of a
    std::string name;
  };
  std::vector<Fn> fns;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      auto ea = elems(a), eb = elems(b);
      if (ea.empty()) {
        fns.push_back({a, b, {}, ""});
        continue;
      }
      if (eb.empty()) continue;
      std::vector<std::size_t> pick(ea.size(), 0);
      while (true) {
        Fn f{a, b, {}, ""};
        for (std::size_t i = 0; i < ea.size(); ++i) f.val.push_back(eb[pick[i]]);
        fns.push_back(f);
        std::size_t k = 0;
        while (k < pick.size() && ++pick[k] == eb.size()) pick[k++] = 0;
        if (k == pick.size()) break;
      }
    }
  auto is_id = [&](const Fn& f) {
    if (f.a != f.b) return false;
    auto ea = elems(f.a);
    for (std::size_t i = 0; i < ea.size(); ++i)
      if (f.val[i] != ea[i]) return false;
    return true;
  };
  for (auto& f : fns) {
    if (is_id(f)) {
      f.name = obj[static_cast<std::size_t>(f.a)];
    } else {
      f.name = "f" + std::to_string(f.a) + "_" + std::to_string(f.b);
      for (int v : f.val) f.name += std::to_string(v);
    }
  }
  std::vector<std::string> names;
  std::map<std::string, std::string> src, tgt;
  for (const auto& f : fns) {
    names.push_back(f.name);
    src[f.name] = obj[static_cast<std::size_t>(f.a)];
    tgt[f.name] = obj[static_cast<std::size_t>(f.b)];
  }
  auto apply = [&](const Fn& f, int x) {
    auto ea = elems(f.a);
    for (std::size_t i = 0; i < ea.size(); ++i)
      if (ea[i] == x) return f.val[i];
    return -1;
  };
  std::vector<std::array<std::string, 3>> comps;
  for (const auto& f : fns)
    for (const auto& g : fns) {
      if (g.b != f.a) continue;
      Fn h{g.a, f.b, {}, ""};
      for (int x : elems(g.a)) h.val.push_back(apply(f, apply(g, x)));
      for (const auto& cand : fns)
        if (cand.a == h.a && cand.b == h.b && cand.val == h.val)
          comps.push_back({f.name, g.name, cand.name});
    }
  return ExplicitCategory::make(names, src, tgt, comps);
}

CatPtr discrete(const std::vector<std::string>& objects) {
  return thin_category(objects, [](std::size_t, std::size_t) { return false; },
                       [](std::size_t, std::size_t) { return ""; });
}

CatPtr parallel_pair() {
  std::vector<std::string> names{"a", "b", "u", "v"};
  std::map<std::string, std::string> src{{"a", "a"}, {"b", "b"}, {"u", "a"}, {"v", "a"}};
  std::map<std::string, std::string> tgt{{"a", "a"}, {"b", "b"}, {"u", "b"}, {"v", "b"}};
  std::vector<std::array<std::string, 3>> comps{{"a", "a", "a"}, {"b", "b", "b"},
                                                {"u", "a", "u"}, {"b", "u", "u"},
                                                {"v", "a", "v"}, {"b", "v", "v"}};
  return ExplicitCategory::make(names, src, tgt, comps);
}

CatPtr cospan_index() {
  return thin_category({"x", "y", "z"},
                       [](std::size_t i, std::size_t j) { return (i == 0 || i == 1) && j == 2; },
                       [](std::size_t i, std::size_t) { return i == 0 ? "xz" : "yz"; });
}

CatPtr span_index() {
  return thin_category({"x", "y", "z"},
                       [](std::size_t i, std::size_t j) { return i == 2 && (j == 0 || j == 1); },
                       [](std::size_t, std::size_t j) { return j == 0 ? "zx" : "zy"; });
}

CatPtr empty() {
  return ExplicitCategory::make({}, {}, {}, {});
}

CatPtr chain_projections(int stages) {
  std::vector<std::string> objects;
  for (int i = 0; i < stages; ++i) objects.push_back("n" + std::to_string(i));
  return thin_category(
      objects, [](std::size_t i, std::size_t j) { return i > j; },
      [](std::size_t i, std::size_t j) {
        return "p" + std::to_string(i) + "_" + std::to_string(j);
      });
}

}  // namespace catstar::fixtures
