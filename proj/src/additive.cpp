#include "catstar/additive.hpp"

#include <algorithm>
#include <set>

namespace catstar {

void AdditiveStructure::canonicalize() {
  std::sort(triples.begin(), triples.end());
  triples.erase(std::unique(triples.begin(), triples.end()), triples.end());
}

std::vector<Mor> AdditiveStructure::sums(Mor f, Mor g) const {
  std::vector<Mor> out;
  for (const auto& tr : triples)
    if (tr[0] == f && tr[1] == g) out.push_back(tr[2]);
  return out;
}

std::optional<Mor> AdditiveStructure::sum(Mor f, Mor g) const {
  auto hs = sums(f, g);
  if (hs.size() != 1) return std::nullopt;
  return hs.front();
}

std::optional<Mor> AdditiveStructure::zero_of(Mor a, Mor b) const {
  for (Mor z : cat->hom(a, b)) {
    bool neutral = true;
    for (Mor f : cat->hom(a, b)) {
      auto s = sum(z, f);
      auto s2 = sum(f, z);
      if (!s || *s != f || !s2 || *s2 != f) {
        neutral = false;
        break;
      }
    }
    if (neutral) return z;
  }
  return std::nullopt;
}

ClauseReport check_additive(const AdditiveStructure& p) {
  ClauseReport rep;
  const auto& c = *p.cat;
  auto fail = [&](const std::string& msg) {
    rep.pass = false;
    rep.failures.push_back(msg);
  };

  // triples must stay inside single hom-sets
  for (const auto& tr : p.triples) {
    if (c.src(tr[0]) != c.src(tr[1]) || c.src(tr[0]) != c.src(tr[2]) ||
        c.tgt(tr[0]) != c.tgt(tr[1]) || c.tgt(tr[0]) != c.tgt(tr[2]))
      fail("(1) addition triple leaves its hom-set: <" + c.name(tr[0]) + "," + c.name(tr[1]) +
           "," + c.name(tr[2]) + ">");
  }

  // clause (1): each hom-set becomes an abelian group
  for (Mor a : c.objects())
    for (Mor b : c.objects()) {
      auto hom = c.hom(a, b);
      if (hom.empty()) {
        fail("(1) empty hom-set " + c.name(a) + " -> " + c.name(b) + " cannot carry a group");
        continue;
      }
      bool total = true;
      for (Mor f : hom)
        for (Mor g : hom) {
          auto hs = p.sums(f, g);
          if (hs.size() != 1) {
            fail("(1) sum of " + c.name(f) + " and " + c.name(g) +
                 (hs.empty() ? " undefined" : " ambiguous"));
            total = false;
          }
        }
      if (!total) continue;
      for (Mor f : hom)
        for (Mor g : hom) {
          if (*p.sum(f, g) != *p.sum(g, f))
            fail("(1) addition not commutative at " + c.name(f) + ", " + c.name(g));
          for (Mor h : hom)
            if (*p.sum(*p.sum(f, g), h) != *p.sum(f, *p.sum(g, h)))
              fail("(1) addition not associative at " + c.name(f) + ", " + c.name(g) + ", " +
                   c.name(h));
        }
      auto zero = p.zero_of(a, b);
      if (!zero) {
        fail("(1) no neutral element in hom(" + c.name(a) + ", " + c.name(b) + ")");
        continue;
      }
      for (Mor f : hom) {
        bool inverse = false;
        for (Mor g : hom)
          if (*p.sum(f, g) == *zero) inverse = true;
        if (!inverse) fail("(1) no additive inverse for " + c.name(f));
      }
    }

  // clause (2): composition is bilinear
  for (Mor f = 0; f < static_cast<Mor>(c.size()); ++f)
    for (Mor g = 0; g < static_cast<Mor>(c.size()); ++g) {
      if (c.src(g) != c.src(f) || c.tgt(g) != c.tgt(f)) continue;
      auto fg = p.sum(f, g);
      if (!fg) continue;  // reported under clause (1)
      // left composition: h.(f+g) = h.f + h.g
      for (Mor h = 0; h < static_cast<Mor>(c.size()); ++h) {
        if (c.src(h) == c.tgt(f)) {
          auto lhs = c.compose(h, *fg);
          auto hf = c.compose(h, f);
          auto hg = c.compose(h, g);
          if (lhs && hf && hg) {
            auto rhs = p.sum(*hf, *hg);
            if (!rhs || *rhs != *lhs)
              fail("(2) composition not left-linear at " + c.name(h) + ".(" + c.name(f) + "+" +
                   c.name(g) + ")");
          }
        }
        if (c.tgt(h) == c.src(f)) {
          auto lhs = c.compose(*fg, h);
          auto fh = c.compose(f, h);
          auto gh = c.compose(g, h);
          if (lhs && fh && gh) {
            auto rhs = p.sum(*fh, *gh);
            if (!rhs || *rhs != *lhs)
              fail("(2) composition not right-linear at (" + c.name(f) + "+" + c.name(g) + ")." +
                   c.name(h));
          }
        }
      }
    }

  // clause (3): zero object
  bool has_zero = false;
  for (Mor z : c.objects()) {
    bool ok = true;
    for (Mor x : c.objects())
      if (c.hom(z, x).size() != 1 || c.hom(x, z).size() != 1) ok = false;
    if (ok) has_zero = true;
  }
  if (!has_zero) fail("(3) no zero object");

  // clause (4): binary biproducts, absence reported as closure status
  for (Mor a : c.objects())
    for (Mor b : c.objects()) {
      bool found = false;
      for (Mor s : c.objects()) {
        for (Mor i1 : c.hom(a, s))
          for (Mor i2 : c.hom(b, s))
            for (Mor p1 : c.hom(s, a))
              for (Mor p2 : c.hom(s, b)) {
                auto p1i1 = c.compose(p1, i1);
                auto p2i2 = c.compose(p2, i2);
                auto p1i2 = c.compose(p1, i2);
                auto p2i1 = c.compose(p2, i1);
                if (!p1i1 || *p1i1 != a || !p2i2 || *p2i2 != b) continue;
                auto zab = p.zero_of(b, a);
                auto zba = p.zero_of(a, b);
                if (!p1i2 || !zab || *p1i2 != *zab) continue;
                if (!p2i1 || !zba || *p2i1 != *zba) continue;
                auto e1 = c.compose(i1, p1);
                auto e2 = c.compose(i2, p2);
                if (!e1 || !e2) continue;
                auto idsum = p.sum(*e1, *e2);
                if (idsum && *idsum == s) found = true;
              }
        if (found) break;
      }
      if (!found)
        rep.closure_warnings.push_back("(4) no biproduct of " + c.name(a) + " and " + c.name(b) +
                                       " inside the fragment");
    }
  return rep;
}

namespace {

std::optional<Mor> zero_mor(const AdditiveStructure& p, Mor a, Mor b) { return p.zero_of(a, b); }

}  // namespace

std::optional<KernelWitness> kernel_search(const AdditiveStructure& p, Mor f) {
  const auto& c = *p.cat;
  Mor a = c.src(f), b = c.tgt(f);
  auto zero_tb = [&](Mor t) { return zero_mor(p, t, b); };
  for (Mor k_obj : c.objects()) {
    for (Mor k : c.hom(k_obj, a)) {
      auto comp = c.compose(f, k);
      auto z = zero_tb(k_obj);
      if (!comp || !z || *comp != *z) continue;
      // universal: every t : T -> A with f.t = 0 factors uniquely through k
      bool universal = true;
      for (Mor t_obj : c.objects()) {
        auto zt = zero_tb(t_obj);
        if (!zt) {
          universal = false;
          break;
        }
        for (Mor t : c.hom(t_obj, a)) {
          auto ft = c.compose(f, t);
          if (!ft || *ft != *zt) continue;
          int count = 0;
          for (Mor u : c.hom(t_obj, k_obj)) {
            auto ku = c.compose(k, u);
            if (ku && *ku == t) ++count;
          }
          if (count != 1) {
            universal = false;
            break;
          }
        }
        if (!universal) break;
      }
      if (universal) return KernelWitness{k_obj, k};
    }
  }
  return std::nullopt;
}

std::optional<KernelWitness> cokernel_search(const AdditiveStructure& p, Mor f) {
  const auto& c = *p.cat;
  Mor a = c.src(f), b = c.tgt(f);
  for (Mor q_obj : c.objects()) {
    for (Mor q : c.hom(b, q_obj)) {
      auto comp = c.compose(q, f);
      auto z = zero_mor(p, a, q_obj);
      if (!comp || !z || *comp != *z) continue;
      bool universal = true;
      for (Mor t_obj : c.objects()) {
        auto zt = zero_mor(p, a, t_obj);
        if (!zt) {
          universal = false;
          break;
        }
        for (Mor t : c.hom(b, t_obj)) {
          auto tf = c.compose(t, f);
          if (!tf || *tf != *zt) continue;
          int count = 0;
          for (Mor u : c.hom(q_obj, t_obj)) {
            auto uq = c.compose(u, q);
            if (uq && *uq == t) ++count;
          }
          if (count != 1) {
            universal = false;
            break;
          }
        }
        if (!universal) break;
      }
      if (universal) return KernelWitness{q_obj, q};
    }
  }
  return std::nullopt;
}

AbelianReport check_abelian(const AdditiveStructure& p) {
  AbelianReport rep;
  rep.additive = check_additive(p);
  rep.pass = rep.additive.pass;
  const auto& c = *p.cat;
  auto fail = [&](const std::string& msg) {
    rep.pass = false;
    rep.failures.push_back(msg);
  };

  for (Mor f = 0; f < static_cast<Mor>(c.size()); ++f) {
    auto ker = kernel_search(p, f);
    if (!ker) {
      fail("no kernel for " + c.name(f));
      continue;
    }
    auto cok = cokernel_search(p, f);
    if (!cok) {
      fail("no cokernel for " + c.name(f));
      continue;
    }
    // image = ker(coker), coimage = coker(ker)
    auto im = kernel_search(p, cok->structure);
    auto coim = cokernel_search(p, ker->structure);
    if (!im || !coim) {
      fail("no image/coimage for " + c.name(f));
      continue;
    }
    // the canonical map: unique g with im.structure . g . coim.structure = f
    std::vector<Mor> candidates;
    for (Mor g : c.hom(coim->object, im->object)) {
      auto inner = c.compose(g, coim->structure);
      if (!inner) continue;
      auto whole = c.compose(im->structure, *inner);
      if (whole && *whole == f) candidates.push_back(g);
    }
    if (candidates.size() != 1) {
      fail("canonical coim -> im map not unique for " + c.name(f));
      continue;
    }
    if (!classify_morphism(c, candidates.front()).iso)
      fail("coim -> im not an isomorphism for " + c.name(f));
  }
  return rep;
}

ExplicitModuleCategory to_explicit_additive(const ModuleFragment& frag) {
  std::vector<std::string> names;
  std::map<std::string, std::string> src, tgt;
  std::vector<std::array<std::string, 3>> comps;

  auto obj_name = [&](int a) { return frag.object(a).name; };
  auto mor_name = [&](int a, int b, int k) {
    const auto& tables = frag.homs(a, b);
    if (a == b) {
      auto id = frag.identity(a);
      if (tables[static_cast<std::size_t>(k)] == id.map) return obj_name(a);
    }
    return obj_name(a) + "=>" + obj_name(b) + "#" + std::to_string(k);
  };

  int nobj = frag.object_count();
  for (int a = 0; a < nobj; ++a)
    for (int b = 0; b < nobj; ++b) {
      const auto& hs = frag.homs(a, b);
      for (int k = 0; k < static_cast<int>(hs.size()); ++k) {
        auto nm = mor_name(a, b, k);
        names.push_back(nm);
        src[nm] = obj_name(a);
        tgt[nm] = obj_name(b);
      }
    }
  // composition triples
  for (int a = 0; a < nobj; ++a)
    for (int b = 0; b < nobj; ++b)
      for (int cidx = 0; cidx < nobj; ++cidx) {
        const auto& fs = frag.homs(a, b);
        const auto& gs = frag.homs(b, cidx);
        for (int i = 0; i < static_cast<int>(fs.size()); ++i)
          for (int j = 0; j < static_cast<int>(gs.size()); ++j) {
            ModHom f{a, b, fs[static_cast<std::size_t>(i)]};
            ModHom g{b, cidx, gs[static_cast<std::size_t>(j)]};
            auto h = frag.compose(g, f);
            comps.push_back({mor_name(b, cidx, j), mor_name(a, b, i),
                             mor_name(a, cidx, frag.hom_index(h))});
          }
      }

  ExplicitModuleCategory out;
  out.additive.cat = ExplicitCategory::make(names, src, tgt, comps);
  const auto& cat = *out.additive.cat;
  for (int a = 0; a < nobj; ++a)
    for (int b = 0; b < nobj; ++b) {
      const auto& hs = frag.homs(a, b);
      for (int i = 0; i < static_cast<int>(hs.size()); ++i)
        for (int j = 0; j < static_cast<int>(hs.size()); ++j) {
          ModHom f{a, b, hs[static_cast<std::size_t>(i)]};
          ModHom g{a, b, hs[static_cast<std::size_t>(j)]};
          auto s = frag.add_homs(f, g);
          out.additive.triples.push_back({cat.at(mor_name(a, b, i)), cat.at(mor_name(a, b, j)),
                                          cat.at(mor_name(a, b, frag.hom_index(s)))});
        }
    }
  out.additive.canonicalize();
  for (int a = 0; a < nobj; ++a)
    for (int b = 0; b < nobj; ++b) {
      const auto& hs = frag.homs(a, b);
      for (int k = 0; k < static_cast<int>(hs.size()); ++k) {
        Mor m = cat.at(mor_name(a, b, k));
        out.hom_of[m] = {a, b, k};
        if (cat.is_object(m)) out.object_of[m] = a;
      }
    }
  return out;
}

}  // namespace catstar
