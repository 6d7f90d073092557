#include "catstar/fibration.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace catstar {

FibreResult fibre(const FibrationData& fib, Mor s) {
  if (!fib.valid()) throw PreconditionError("fibration data invalid");
  const auto& t = *fib.total;
  if (!fib.base->is_object(s)) throw PreconditionError("fibre base is not an object");

  std::vector<std::string> names;
  std::map<std::string, std::string> src, tgt;
  std::vector<std::array<std::string, 3>> comps;
  std::set<Mor> keep;
  for (Mor f = 0; f < static_cast<Mor>(t.size()); ++f)
    if (fib.projection(f) == s) keep.insert(f);
  for (Mor f : keep) {
    names.push_back(t.name(f));
    src[t.name(f)] = t.name(t.src(f));
    tgt[t.name(f)] = t.name(t.tgt(f));
  }
  for (const auto& tr : t.triples())
    if (keep.count(tr[0]) && keep.count(tr[1]) && keep.count(tr[2]))
      comps.push_back({t.name(tr[0]), t.name(tr[1]), t.name(tr[2])});

  FibreResult out;
  out.cat = ExplicitCategory::make(names, src, tgt, comps);
  for (Mor f = 0; f < static_cast<Mor>(out.cat->size()); ++f)
    out.to_total[f] = t.at(out.cat->name(f));
  return out;
}

CartesianCheck is_cartesian(const FibrationData& fib, Mor alpha) {
  const auto& t = *fib.total;
  const auto& b = *fib.base;
  const auto& p = fib.projection;
  CartesianCheck out;
  Mor y = t.tgt(alpha), x = t.src(alpha);
  for (Mor u : t.with_target(y)) {
    Mor xp = t.src(u);
    for (Mor beta : b.hom(p(xp), b.src(p(alpha)))) {
      auto pu = b.compose(p(alpha), beta);
      if (!pu || *pu != p(u)) continue;
      // exactly one bar_u : X' -> X with u = alpha . bar_u and p(bar_u) = beta
      int count = 0;
      for (Mor bar : t.hom(xp, x)) {
        if (p(bar) != beta) continue;
        auto comp = t.compose(alpha, bar);
        if (comp && *comp == u) ++count;
      }
      if (count != 1) {
        out.cartesian = false;
        out.witness = {t.name(u), b.name(beta),
                       count == 0 ? "no filler" : "multiple fillers"};
        return out;
      }
    }
  }
  return out;
}

std::optional<Mor> cartesian_lift(const FibrationData& fib, Mor alpha, Mor y) {
  const auto& t = *fib.total;
  if (!t.is_object(y)) throw PreconditionError("lift target is not an object");
  if (fib.projection(y) != fib.base->tgt(alpha))
    throw PreconditionError("lift target does not sit over tgt(alpha)");
  for (Mor g : t.with_target(y)) {
    if (fib.projection(g) != alpha) continue;
    if (is_cartesian(fib, g).cartesian) return g;
  }
  return std::nullopt;
}

FibrationCheck is_fibration(const FibrationData& fib) {
  if (!fib.valid()) throw PreconditionError("fibration data invalid");
  FibrationCheck out;
  const auto& b = *fib.base;
  const auto& t = *fib.total;
  for (Mor alpha = 0; alpha < static_cast<Mor>(b.size()); ++alpha) {
    for (Mor y : t.objects()) {
      if (fib.projection(y) != b.tgt(alpha)) continue;
      if (!cartesian_lift(fib, alpha, y)) {
        out.ok = false;
        out.failing = {alpha, y};
        return out;
      }
    }
  }
  return out;
}

std::optional<Mor> HomOverAddition::sum(Mor a, Mor b) const {
  std::optional<Mor> found;
  for (const auto& tr : triples)
    if (tr[0] == a && tr[1] == b) {
      if (found) return std::nullopt;
      found = tr[2];
    }
  return found;
}

namespace {

using SumIndex = std::map<std::pair<Mor, Mor>, std::vector<Mor>>;

SumIndex index_sums(const HomOverAddition& p) {
  SumIndex out;
  for (const auto& tr : p.triples) out[{tr[0], tr[1]}].push_back(tr[2]);
  return out;
}

std::optional<Mor> sum_of(const SumIndex& idx, Mor a, Mor b) {
  auto it = idx.find({a, b});
  if (it == idx.end() || it->second.size() != 1) return std::nullopt;
  return it->second.front();
}

// zero element of Hom_f(X, Y) under the given addition
std::optional<Mor> hom_over_zero(const FibrationData& fib, const SumIndex& sums, Mor f, Mor x,
                                 Mor y) {
  const auto& t = *fib.total;
  std::vector<Mor> homf;
  for (Mor g : t.hom(x, y))
    if (fib.projection(g) == f) homf.push_back(g);
  for (Mor z : homf) {
    bool neutral = true;
    for (Mor g : homf) {
      auto s = sum_of(sums, z, g);
      auto s2 = sum_of(sums, g, z);
      if (!s || *s != g || !s2 || *s2 != g) {
        neutral = false;
        break;
      }
    }
    if (neutral) return z;
  }
  return std::nullopt;
}

AdditiveStructure fibre_additive(const HomOverAddition& p, const FibreResult& fr) {
  AdditiveStructure out;
  out.cat = fr.cat;
  std::map<Mor, Mor> back;  // total -> fibre
  for (const auto& [fm, tm] : fr.to_total) back[tm] = fm;
  for (const auto& tr : p.triples) {
    auto a = back.find(tr[0]);
    auto b = back.find(tr[1]);
    auto c = back.find(tr[2]);
    if (a != back.end() && b != back.end() && c != back.end())
      out.triples.push_back({a->second, b->second, c->second});
  }
  out.canonicalize();
  return out;
}

}  // namespace

OverBaseReport check_additive_over_base(const FibrationData& fib, const HomOverAddition& p) {
  OverBaseReport rep;
  const auto& t = *fib.total;
  const auto& b = *fib.base;
  auto sums = index_sums(p);
  auto fail = [&](const std::string& m) {
    rep.pass = false;
    rep.failures.push_back(m);
  };

  // every addition triple stays inside one Hom_f(X, Y)
  for (const auto& tr : p.triples) {
    bool same = t.src(tr[0]) == t.src(tr[1]) && t.src(tr[0]) == t.src(tr[2]) &&
                t.tgt(tr[0]) == t.tgt(tr[1]) && t.tgt(tr[0]) == t.tgt(tr[2]) &&
                fib.projection(tr[0]) == fib.projection(tr[1]) &&
                fib.projection(tr[0]) == fib.projection(tr[2]);
    if (!same) fail("addition triple leaves its Hom_f set at " + t.name(tr[0]));
  }

  // group laws on every Hom_f(X, Y)
  for (Mor x : t.objects())
    for (Mor y : t.objects())
      for (Mor f = 0; f < static_cast<Mor>(b.size()); ++f) {
        if (b.src(f) != fib.projection(x) || b.tgt(f) != fib.projection(y)) continue;
        std::vector<Mor> homf;
        for (Mor g : t.hom(x, y))
          if (fib.projection(g) == f) homf.push_back(g);
        if (homf.empty()) {
          fail("Hom_" + b.name(f) + "(" + t.name(x) + ", " + t.name(y) +
               ") is empty; no group structure possible");
          continue;
        }
        for (Mor g1 : homf)
          for (Mor g2 : homf) {
            auto s = sum_of(sums, g1, g2);
            if (!s) {
              fail("sum undefined in Hom_" + b.name(f) + " at " + t.name(g1) + " + " + t.name(g2));
              continue;
            }
            auto s2 = sum_of(sums, g2, g1);
            if (!s2 || *s2 != *s) fail("addition not commutative at " + t.name(g1));
          }
        if (!hom_over_zero(fib, sums, f, x, y)) fail("no neutral element in Hom_" + b.name(f));
      }

  // biadditive composition
  for (Mor g1 = 0; g1 < static_cast<Mor>(t.size()); ++g1)
    for (Mor g2 : t.hom(t.src(g1), t.tgt(g1))) {
      if (fib.projection(g1) != fib.projection(g2)) continue;
      auto s = sum_of(sums, g1, g2);
      if (!s) continue;
      for (Mor h : t.with_source(t.tgt(g1))) {
        auto lhs = t.compose(h, *s);
        auto a1 = t.compose(h, g1);
        auto a2 = t.compose(h, g2);
        if (lhs && a1 && a2) {
          auto rhs = sum_of(sums, *a1, *a2);
          if (!rhs || *rhs != *lhs)
            fail("composition not biadditive at " + t.name(h) + ".(" + t.name(g1) + "+" +
                 t.name(g2) + ")");
        }
      }
      for (Mor h : t.with_target(t.src(g1))) {
        auto lhs = t.compose(*s, h);
        auto a1 = t.compose(g1, h);
        auto a2 = t.compose(g2, h);
        if (lhs && a1 && a2) {
          auto rhs = sum_of(sums, *a1, *a2);
          if (!rhs || *rhs != *lhs)
            fail("composition not biadditive at (" + t.name(g1) + "+" + t.name(g2) + ")." +
                 t.name(h));
        }
      }
    }

  // fibres additive
  for (Mor s : fib.base->objects()) {
    auto fr = fibre(fib, s);
    if (fr.cat->objects().empty()) continue;  // empty fibre: vacuous
    auto add = fibre_additive(p, fr);
    auto sub = check_additive(add);
    if (!sub.pass) {
      for (const auto& m : sub.failures)
        fail("fibre over " + fib.base->name(s) + ": " + m);
    }
  }
  return rep;
}

OverBaseReport check_abelian_over_base(const FibrationData& fib, const HomOverAddition& p) {
  OverBaseReport rep = check_additive_over_base(fib, p);
  const auto& t = *fib.total;
  const auto& b = *fib.base;
  auto sums = index_sums(p);
  auto fail = [&](const std::string& m) {
    rep.pass = false;
    rep.failures.push_back(m);
  };

  // fibres abelian
  std::map<Mor, FibreResult> fibres;
  std::map<Mor, AdditiveStructure> fibre_adds;
  for (Mor s : b.objects()) {
    fibres[s] = fibre(fib, s);
    fibre_adds[s] = fibre_additive(p, fibres[s]);
    if (fibres[s].cat->objects().empty()) continue;
    auto ab = check_abelian(fibre_adds[s]);
    if (!ab.pass)
      for (const auto& m : ab.failures) fail("fibre over " + b.name(s) + ": " + m);
  }

  // short exact sequences of a fibre: each mono paired with its cokernel
  auto fibre_sess = [&](Mor s) {
    std::vector<std::pair<Mor, Mor>> out;  // (mono, epi) as fibre morphisms
    const auto& fr = fibres[s];
    const auto& add = fibre_adds[s];
    for (Mor m = 0; m < static_cast<Mor>(fr.cat->size()); ++m) {
      if (!classify_morphism(*fr.cat, m).mono) continue;
      auto cok = cokernel_search(add, m);
      if (cok) out.emplace_back(m, cok->structure);
    }
    return out;
  };

  // Hom_f(-, Y) and Hom_f(X, -) left exact, through the group structures
  for (Mor f = 0; f < static_cast<Mor>(b.size()); ++f) {
    Mor bx = b.src(f), by = b.tgt(f);
    auto homf = [&](Mor x, Mor y) {
      std::vector<Mor> out;
      for (Mor g : t.hom(x, y))
        if (fib.projection(g) == f) out.push_back(g);
      return out;
    };
    // contravariant in X: a fibre ses A' -m-> A -e-> A'' over bx gives
    // 0 -> Hom_f(A'', Y) -> Hom_f(A, Y) -> Hom_f(A', Y)
    for (const auto& [m, e] : fibre_sess(bx)) {
      const auto& fr = fibres[bx];
      Mor tm = fr.to_total.at(m), te = fr.to_total.at(e);
      for (Mor y : t.objects()) {
        if (fib.projection(y) != by) continue;
        // injectivity of precomposition with the epi e
        std::map<Mor, int> hits;
        for (Mor g : homf(t.tgt(te), y)) {
          auto ge = t.compose(g, te);
          if (!ge) continue;
          hits[*ge]++;
        }
        for (const auto& [img, n] : hits)
          if (n > 1) fail("Hom_" + b.name(f) + "(-, " + t.name(y) + ") not left exact: precomposition with " + t.name(te) + " identifies maps");
        // exactness in the middle: ker(pre_m) = im(pre_e)
        auto zero_src = hom_over_zero(fib, sums, f, t.src(tm), y);
        std::set<Mor> kernel, image;
        for (Mor g : homf(t.tgt(tm), y)) {
          auto gm = t.compose(g, tm);
          if (gm && zero_src && *gm == *zero_src) kernel.insert(g);
        }
        for (Mor g : homf(t.tgt(te), y)) {
          auto ge = t.compose(g, te);
          if (ge) image.insert(*ge);
        }
        if (kernel != image)
          fail("Hom_" + b.name(f) + "(-, " + t.name(y) + ") fails exactness at " + t.name(tm));
      }
    }
    // covariant in Y: a fibre ses B' -m-> B -e-> B'' over by gives
    // 0 -> Hom_f(X, B') -> Hom_f(X, B) -> Hom_f(X, B'')
    for (const auto& [m, e] : fibre_sess(by)) {
      const auto& fr = fibres[by];
      Mor tm = fr.to_total.at(m), te = fr.to_total.at(e);
      for (Mor x : t.objects()) {
        if (fib.projection(x) != bx) continue;
        std::map<Mor, int> hits;
        for (Mor g : homf(x, t.src(tm))) {
          auto mg = t.compose(tm, g);
          if (!mg) continue;
          hits[*mg]++;
        }
        for (const auto& [img, n] : hits)
          if (n > 1) fail("Hom_" + b.name(f) + "(" + t.name(x) + ", -) not left exact: postcomposition with " + t.name(tm) + " identifies maps");
        auto zero_dst = hom_over_zero(fib, sums, f, x, t.tgt(te));
        std::set<Mor> kernel, image;
        for (Mor g : homf(x, t.src(te))) {
          auto eg = t.compose(te, g);
          if (eg && zero_dst && *eg == *zero_dst) kernel.insert(g);
        }
        for (Mor g : homf(x, t.src(tm))) {
          auto mg = t.compose(tm, g);
          if (mg) image.insert(*mg);
        }
        if (kernel != image)
          fail("Hom_" + b.name(f) + "(" + t.name(x) + ", -) fails exactness at " + t.name(te));
      }
    }
  }
  return rep;
}

namespace {

// linear maps m -> m' where scalars act through the ring hom phi
std::vector<std::vector<int>> twisted_homs(const Module& m, const Module& mp,
                                           const std::vector<int>& phi) {
  std::vector<std::vector<int>> out;
  auto gens = m.generators();
  if (gens.empty()) return {std::vector<int>{0}};
  std::vector<std::vector<int>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (int y = 0; y < mp.size(); ++y) {
      int acc = 0;
      for (int k = 0; k < m.factors[i]; ++k) acc = mp.add(acc, y);
      if (acc == 0) candidates[i].push_back(y);
    }
  std::vector<int> pick(gens.size(), 0);
  while (true) {
    std::vector<int> table(static_cast<std::size_t>(m.size()));
    for (int x = 0; x < m.size(); ++x) {
      auto d = m.decode(x);
      int acc = 0;
      for (std::size_t i = 0; i < gens.size(); ++i)
        for (int k = 0; k < d[i]; ++k) acc = mp.add(acc, candidates[i][static_cast<std::size_t>(pick[i])]);
      table[static_cast<std::size_t>(x)] = acc;
    }
    bool linear = true;
    for (int x = 0; x < m.size() && linear; ++x)
      for (int r = 0; r < m.ring->n && linear; ++r)
        if (table[static_cast<std::size_t>(m.smul(r, x))] !=
            mp.smul(phi[static_cast<std::size_t>(r)], table[static_cast<std::size_t>(x)]))
          linear = false;
    if (linear) out.push_back(table);
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == static_cast<int>(candidates[i].size())) pick[i++] = 0;
    if (i == pick.size()) break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

ModuleFibration build_module_fibration(const std::vector<RingPtr>& rings, int cap) {
  ModuleFibration out;
  out.rings = rings;
  for (const auto& r : rings) out.fragments.push_back(std::make_shared<ModuleFragment>(r, cap));

  // base category of rings
  std::vector<std::string> bnames;
  std::map<std::string, std::string> bsrc, btgt;
  std::vector<std::array<std::string, 3>> bcomps;
  struct BaseArrow {
    int r1, r2;
    std::vector<int> table;
    std::string name;
  };
  std::vector<BaseArrow> barrows;
  auto ring_obj = [&](int i) { return rings[static_cast<std::size_t>(i)]->name; };
  for (int i = 0; i < static_cast<int>(rings.size()); ++i)
    for (int j = 0; j < static_cast<int>(rings.size()); ++j) {
      auto hs = ring_homs(*rings[static_cast<std::size_t>(i)], *rings[static_cast<std::size_t>(j)]);
      for (std::size_t k = 0; k < hs.size(); ++k) {
        BaseArrow a{i, j, hs[k], ""};
        bool is_id = i == j;
        if (is_id)
          for (int v = 0; v < rings[static_cast<std::size_t>(i)]->n; ++v)
            if (hs[k][static_cast<std::size_t>(v)] != v) is_id = false;
        a.name = is_id ? ring_obj(i)
                       : "f" + std::to_string(k) + "[" + ring_obj(i) + ">" + ring_obj(j) + "]";
        barrows.push_back(a);
      }
    }
  for (const auto& a : barrows) {
    bnames.push_back(a.name);
    bsrc[a.name] = ring_obj(a.r1);
    btgt[a.name] = ring_obj(a.r2);
  }
  for (const auto& a1 : barrows)
    for (const auto& a2 : barrows) {
      if (a2.r2 != a1.r1) continue;  // compose a1 after a2
      std::vector<int> comp(a2.table.size());
      for (std::size_t v = 0; v < a2.table.size(); ++v)
        comp[v] = a1.table[static_cast<std::size_t>(a2.table[v])];
      for (const auto& a3 : barrows)
        if (a3.r1 == a2.r1 && a3.r2 == a1.r2 && a3.table == comp)
          bcomps.push_back({a1.name, a2.name, a3.name});
    }
  CatPtr base = ExplicitCategory::make(bnames, bsrc, btgt, bcomps);

  // total category of pairs
  struct TotalObject {
    int ring, module;
    std::string name;
  };
  std::vector<TotalObject> tobjs;
  auto tobj_name = [&](int ri, int mi) {
    return "(" + ring_obj(ri) + "," + out.fragments[static_cast<std::size_t>(ri)]->object(mi).name +
           ")";
  };
  for (int ri = 0; ri < static_cast<int>(rings.size()); ++ri)
    for (int mi = 0; mi < out.fragments[static_cast<std::size_t>(ri)]->object_count(); ++mi)
      tobjs.push_back({ri, mi, tobj_name(ri, mi)});

  struct TotalArrow {
    int o1, o2;          // indices into tobjs
    std::size_t phi_idx;  // index into barrows
    std::vector<int> f;   // module map table
    std::string name;
  };
  std::vector<TotalArrow> tarrows;
  for (int o1 = 0; o1 < static_cast<int>(tobjs.size()); ++o1)
    for (int o2 = 0; o2 < static_cast<int>(tobjs.size()); ++o2) {
      const auto& a = tobjs[static_cast<std::size_t>(o1)];
      const auto& b2 = tobjs[static_cast<std::size_t>(o2)];
      for (std::size_t pk = 0; pk < barrows.size(); ++pk) {
        if (barrows[pk].r1 != a.ring || barrows[pk].r2 != b2.ring) continue;
        const auto& m = out.fragments[static_cast<std::size_t>(a.ring)]->object(a.module);
        const auto& mp = out.fragments[static_cast<std::size_t>(b2.ring)]->object(b2.module);
        auto fs = twisted_homs(m, mp, barrows[pk].table);
        for (std::size_t fk = 0; fk < fs.size(); ++fk) {
          TotalArrow ta{o1, o2, pk, fs[fk], ""};
          bool is_id = o1 == o2 && barrows[pk].name == ring_obj(a.ring);
          if (is_id)
            for (int v = 0; v < m.size(); ++v)
              if (fs[fk][static_cast<std::size_t>(v)] != v) is_id = false;
          ta.name = is_id ? a.name
                          : "m" + std::to_string(fk) + "p" + std::to_string(pk) + "[" + a.name +
                                ">" + b2.name + "]";
          tarrows.push_back(ta);
        }
      }
    }
  std::vector<std::string> tnames;
  std::map<std::string, std::string> tsrc, ttgt;
  std::vector<std::array<std::string, 3>> tcomps;
  for (const auto& ta : tarrows) {
    tnames.push_back(ta.name);
    tsrc[ta.name] = tobjs[static_cast<std::size_t>(ta.o1)].name;
    ttgt[ta.name] = tobjs[static_cast<std::size_t>(ta.o2)].name;
  }
  for (const auto& g : tarrows)
    for (const auto& f : tarrows) {
      if (f.o2 != g.o1) continue;  // g after f
      // base composite
      std::vector<int> phi(barrows[f.phi_idx].table.size());
      for (std::size_t v = 0; v < phi.size(); ++v)
        phi[v] = barrows[g.phi_idx].table[static_cast<std::size_t>(barrows[f.phi_idx].table[v])];
      std::vector<int> comp(f.f.size());
      for (std::size_t v = 0; v < comp.size(); ++v)
        comp[v] = g.f[static_cast<std::size_t>(f.f[v])];
      for (const auto& h : tarrows) {
        if (h.o1 != f.o1 || h.o2 != g.o2) continue;
        if (barrows[h.phi_idx].table != phi || h.f != comp) continue;
        tcomps.push_back({g.name, f.name, h.name});
      }
    }
  CatPtr total = ExplicitCategory::make(tnames, tsrc, ttgt, tcomps);

  // projection
  FunctorTable proj{total, base, std::vector<Mor>(total->size(), -1)};
  for (const auto& ta : tarrows)
    proj.action[static_cast<std::size_t>(total->at(ta.name))] =
        base->at(barrows[ta.phi_idx].name);

  out.data = FibrationData{total, base, proj};
  if (!out.data.valid()) throw StructuralError("module fibration projection is not a functor");

  // pointwise addition on every Hom_phi set
  for (const auto& f : tarrows)
    for (const auto& g : tarrows) {
      if (f.o1 != g.o1 || f.o2 != g.o2 || f.phi_idx != g.phi_idx) continue;
      const auto& mp = out.fragments[static_cast<std::size_t>(
                                         tobjs[static_cast<std::size_t>(f.o2)].ring)]
                           ->object(tobjs[static_cast<std::size_t>(f.o2)].module);
      std::vector<int> sum(f.f.size());
      for (std::size_t v = 0; v < sum.size(); ++v) sum[v] = mp.add(f.f[v], g.f[v]);
      for (const auto& h : tarrows) {
        if (h.o1 != f.o1 || h.o2 != f.o2 || h.phi_idx != f.phi_idx || h.f != sum) continue;
        out.addition.triples.push_back(
            {total->at(f.name), total->at(g.name), total->at(h.name)});
      }
    }
  std::sort(out.addition.triples.begin(), out.addition.triples.end());

  for (const auto& to : tobjs)
    out.object_info[total->at(to.name)] = {to.ring, to.module};
  return out;
}

std::vector<FibreLimitsRow> fibre_limits(const FibrationData& fib, const std::string& kind) {
  std::vector<FibreLimitsRow> out;
  for (Mor s : fib.base->objects()) {
    auto fr = fibre(fib, s);
    FibreLimitsRow row;
    row.base_object = s;
    if (!fr.cat->objects().empty()) {
      for (auto& item : special_limits(fr.cat))
        if (kind == "all" || item.kind == kind) row.items.push_back(item);
    }
    out.push_back(row);
  }
  return out;
}

FibrationData parse_fibration(std::istream& in, CatPtr total, CatPtr base) {
  FunctorTable proj{total, base, std::vector<Mor>(total->size(), -1)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string head, from, arrow, to;
    if (!(ls >> head) || head[0] == '#') continue;
    if (head != "proj" || !(ls >> from >> arrow >> to) || arrow != "->")
      throw ParseError("expected 'proj <morF> -> <morE>'", lineno, 1);
    proj.action[static_cast<std::size_t>(total->at(from))] = base->at(to);
  }
  for (std::size_t i = 0; i < proj.action.size(); ++i)
    if (proj.action[i] < 0)
      throw StructuralError("projection not total: missing " + total->name(static_cast<Mor>(i)));
  return FibrationData{total, base, proj};
}

FibrationData load_fibration_file(const std::string& proj_path, CatPtr total, CatPtr base) {
  std::ifstream in(proj_path);
  if (!in) throw StructuralError("cannot open projection file: " + proj_path);
  return parse_fibration(in, total, base);
}

}  // namespace catstar
