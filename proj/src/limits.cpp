#include "catstar/limits.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "catstar/fixtures.hpp"

namespace catstar {

bool PresheafTable::valid() const {
  if (!base) return false;
  for (Mor x : base->objects())
    if (!values.count(x)) return false;
  for (Mor f = 0; f < static_cast<Mor>(base->size()); ++f) {
    auto it = restriction.find(f);
    if (it == restriction.end()) return false;
    const auto& vx = values.at(base->tgt(f));
    const auto& vy = values.at(base->src(f));
    if (it->second.size() != vx.size()) return false;
    for (const auto& v : vx) {
      auto jt = it->second.find(v);
      if (jt == it->second.end()) return false;
      if (std::find(vy.begin(), vy.end(), jt->second) == vy.end()) return false;
    }
  }
  // identities act as identities
  for (Mor x : base->objects())
    for (const auto& v : values.at(x))
      if (restriction.at(x).at(v) != v) return false;
  // contravariant composition: restriction(f.g) = restriction(g) o restriction(f)
  for (const auto& tr : base->triples()) {
    Mor f = tr[0], g = tr[1], h = tr[2];
    for (const auto& v : values.at(base->tgt(f)))
      if (restriction.at(h).at(v) != restriction.at(g).at(restriction.at(f).at(v))) return false;
  }
  return true;
}

PresheafTable yoneda_presheaf(CatPtr cat, Mor x) {
  if (!cat->is_object(x)) throw PreconditionError("yoneda: not an object");
  PresheafTable p;
  p.base = cat;
  for (Mor y : cat->objects()) {
    auto& vals = p.values[y];
    for (Mor f : cat->hom(y, x)) vals.push_back(cat->name(f));
  }
  for (Mor f = 0; f < static_cast<Mor>(cat->size()); ++f) {
    auto& r = p.restriction[f];
    for (Mor g : cat->hom(cat->tgt(f), x)) {
      auto h = cat->compose(g, f);
      if (!h) throw StructuralError("yoneda: missing composite");
      r[cat->name(g)] = cat->name(*h);
    }
  }
  return p;
}

namespace {

// Backtracking search for a natural family of bijections values <-> hom(-, x).
std::optional<NatIsoWitness> natural_iso_to_hom(const PresheafTable& p, Mor x) {
  const auto& c = *p.base;
  auto obs = c.objects();
  std::map<Mor, std::map<std::string, std::string>> assign;

  std::function<bool(std::size_t)> rec = [&](std::size_t k) -> bool {
    if (k == obs.size()) return true;
    Mor y = obs[k];
    const auto& vals = p.values.at(y);
    std::vector<std::string> homs;
    for (Mor f : c.hom(y, x)) homs.push_back(c.name(f));
    if (vals.size() != homs.size()) return false;
    if (vals.empty()) {
      assign[y] = {};
      if (rec(k + 1)) return true;
      assign.erase(y);
      return false;
    }

    std::sort(homs.begin(), homs.end());
    std::vector<std::size_t> perm(homs.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    do {
      std::map<std::string, std::string> cand;
      for (std::size_t i = 0; i < vals.size(); ++i) cand[vals[i]] = homs[perm[i]];
      assign[y] = cand;
      // naturality: for f : z -> y, alpha_z(res_f(v)) = alpha_y(v) . f,
      // checked for every morphism with both endpoints assigned
      bool ok = true;
      for (Mor f = 0; f < static_cast<Mor>(c.size()) && ok; ++f) {
        Mor ty = c.tgt(f), sz = c.src(f);
        if (!assign.count(ty) || !assign.count(sz)) continue;
        for (const auto& v : p.values.at(ty)) {
          auto lhs = assign.at(sz).at(p.restriction.at(f).at(v));
          auto rhs = c.compose(c.at(assign.at(ty).at(v)), f);
          if (!rhs || c.name(*rhs) != lhs) {
            ok = false;
            break;
          }
        }
      }
      if (ok && rec(k + 1)) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    assign.erase(y);
    return false;
  };

  if (!rec(0)) return std::nullopt;
  return NatIsoWitness{x, assign};
}

}  // namespace

std::optional<NatIsoWitness> is_representable(const PresheafTable& p) {
  if (!p.valid()) throw PreconditionError("is_representable: presheaf invalid");
  for (Mor x : p.base->objects()) {
    auto w = natural_iso_to_hom(p, x);
    if (w) return w;
  }
  return std::nullopt;
}

std::vector<ConeWitness> enumerate_cones(const DiagramTable& d) {
  if (!d.valid()) throw PreconditionError("diagram invalid");
  const auto& idx = *d.index;
  const auto& c = *d.target;
  auto iobs = idx.objects();
  std::vector<ConeWitness> out;

  for (Mor apex : c.objects()) {
    std::map<Mor, Mor> legs;
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
      if (k == iobs.size()) {
        out.push_back(ConeWitness{apex, legs});
        return;
      }
      Mor i = iobs[k];
      for (Mor leg : c.hom(apex, d.functor(i))) {
        legs[i] = leg;
        bool ok = true;
        for (Mor f = 0; f < static_cast<Mor>(idx.size()) && ok; ++f) {
          Mor si = idx.src(f), ti = idx.tgt(f);
          if (!legs.count(si) || !legs.count(ti)) continue;
          auto lhs = c.compose(d.functor(f), legs[si]);
          if (!lhs || *lhs != legs[ti]) ok = false;
        }
        if (ok) rec(k + 1);
        legs.erase(i);
      }
    };
    rec(0);
  }
  return out;
}

namespace {

std::vector<Mor> mediators_into(const DiagramTable& d, const ConeWitness& from,
                                const ConeWitness& into) {
  const auto& c = *d.target;
  std::vector<Mor> out;
  for (Mor m : c.hom(from.apex, into.apex)) {
    bool ok = true;
    for (const auto& [i, leg] : into.legs) {
      auto comp = c.compose(leg, m);
      if (!comp || *comp != from.legs.at(i)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(m);
  }
  return out;
}

bool cone_less(const ExplicitCategory& c, const ConeWitness& a, const ConeWitness& b) {
  if (c.name(a.apex) != c.name(b.apex)) return c.name(a.apex) < c.name(b.apex);
  auto key = [&](const ConeWitness& w) {
    std::vector<std::string> v;
    for (const auto& [i, leg] : w.legs) v.push_back(c.name(leg));
    return v;
  };
  return key(a) < key(b);
}

DiagramTable dualize(const DiagramTable& d) {
  DiagramTable out;
  out.index = opposite(*d.index);
  out.target = opposite(*d.target);
  out.functor = FunctorTable{out.index, out.target, d.functor.action};
  return out;
}

}  // namespace

std::optional<LimitResult> limit(const DiagramTable& d) {
  auto cones = enumerate_cones(d);
  std::vector<ConeWitness> terminal;
  for (const auto& cand : cones) {
    bool ok = true;
    for (const auto& other : cones)
      if (mediators_into(d, other, cand).size() != 1) {
        ok = false;
        break;
      }
    if (ok) terminal.push_back(cand);
  }
  if (terminal.empty()) return std::nullopt;
  std::sort(terminal.begin(), terminal.end(),
            [&](const ConeWitness& a, const ConeWitness& b) { return cone_less(*d.target, a, b); });
  LimitResult res;
  res.cone = terminal.front();
  for (const auto& other : cones)
    res.mediators.emplace_back(other, mediators_into(d, other, res.cone).front());
  return res;
}

std::optional<LimitResult> colimit(const DiagramTable& d) {
  // morphism indices are shared with the opposite, so the result needs no
  // re-translation; legs are read as morphisms apex <- G(i) of the original
  return limit(dualize(d));
}

std::vector<SpecialLimitItem> special_limits(CatPtr cat) {
  std::vector<SpecialLimitItem> out;
  const auto& c = *cat;
  auto objs = c.objects();

  auto empty_diagram = [&]() {
    DiagramTable d;
    d.index = fixtures::empty();
    d.target = cat;
    d.functor = FunctorTable{d.index, cat, {}};
    return d;
  };

  {
    SpecialLimitItem item{"initial", false, "", ""};
    auto r = colimit(empty_diagram());
    if (r) {
      item.has = true;
      item.witness = c.name(r->cone.apex);
    } else {
      item.counterexample = "empty diagram has no initial cocone";
    }
    out.push_back(item);
  }
  {
    SpecialLimitItem item{"final", false, "", ""};
    auto r = limit(empty_diagram());
    if (r) {
      item.has = true;
      item.witness = c.name(r->cone.apex);
    } else {
      item.counterexample = "empty diagram has no terminal cone";
    }
    out.push_back(item);
  }
  {
    SpecialLimitItem item{"zero", false, "", ""};
    auto ini = colimit(empty_diagram());
    auto fin = limit(empty_diagram());
    if (ini && fin) {
      Mor a = ini->cone.apex, b = fin->cone.apex;
      bool iso = a == b;
      for (Mor f : c.hom(a, b))
        if (classify_morphism(c, f).iso) iso = true;
      if (iso) {
        item.has = true;
        item.witness = c.name(a);
      } else {
        item.counterexample =
            "initial " + c.name(a) + " and final " + c.name(b) + " not isomorphic";
      }
    } else {
      item.counterexample = "missing initial or final object";
    }
    out.push_back(item);
  }

  auto run_shape = [&](const std::string& kind, CatPtr shape, bool colim,
                       const std::vector<FunctorTable>& diagrams) {
    SpecialLimitItem item{kind, true, "", ""};
    for (const auto& f : diagrams) {
      DiagramTable d{shape, cat, f};
      auto r = colim ? colimit(d) : limit(d);
      if (!r) {
        item.has = false;
        std::ostringstream os;
        os << "no " << (colim ? "colimit" : "limit") << " for diagram:";
        for (Mor m = 0; m < static_cast<Mor>(shape->size()); ++m)
          os << " " << shape->name(m) << "->" << c.name(f(m));
        item.counterexample = os.str();
        break;
      }
      if (item.witness.empty()) item.witness = c.name(r->cone.apex);
    }
    return item;
  };

  auto disc2 = fixtures::discrete({"x", "y"});
  std::vector<FunctorTable> pair_diagrams;
  for (Mor a : objs)
    for (Mor b : objs) {
      FunctorTable f{disc2, cat, std::vector<Mor>(disc2->size(), -1)};
      f.action[static_cast<std::size_t>(disc2->at("x"))] = a;
      f.action[static_cast<std::size_t>(disc2->at("y"))] = b;
      pair_diagrams.push_back(f);
    }
  out.push_back(run_shape("binary-product", disc2, false, pair_diagrams));
  out.push_back(run_shape("binary-coproduct", disc2, true, pair_diagrams));

  auto cospan = fixtures::cospan_index();
  std::vector<FunctorTable> cospan_diagrams;
  for (Mor f = 0; f < static_cast<Mor>(c.size()); ++f)
    for (Mor g = 0; g < static_cast<Mor>(c.size()); ++g) {
      if (c.tgt(f) != c.tgt(g)) continue;
      FunctorTable t{cospan, cat, std::vector<Mor>(cospan->size(), -1)};
      t.action[static_cast<std::size_t>(cospan->at("x"))] = c.src(f);
      t.action[static_cast<std::size_t>(cospan->at("y"))] = c.src(g);
      t.action[static_cast<std::size_t>(cospan->at("z"))] = c.tgt(f);
      t.action[static_cast<std::size_t>(cospan->at("xz"))] = f;
      t.action[static_cast<std::size_t>(cospan->at("yz"))] = g;
      cospan_diagrams.push_back(t);
    }
  out.push_back(run_shape("fibred-product", cospan, false, cospan_diagrams));

  auto span = fixtures::span_index();
  std::vector<FunctorTable> span_diagrams;
  for (Mor f = 0; f < static_cast<Mor>(c.size()); ++f)
    for (Mor g = 0; g < static_cast<Mor>(c.size()); ++g) {
      if (c.src(f) != c.src(g)) continue;
      FunctorTable t{span, cat, std::vector<Mor>(span->size(), -1)};
      t.action[static_cast<std::size_t>(span->at("x"))] = c.tgt(f);
      t.action[static_cast<std::size_t>(span->at("y"))] = c.tgt(g);
      t.action[static_cast<std::size_t>(span->at("z"))] = c.src(f);
      t.action[static_cast<std::size_t>(span->at("zx"))] = f;
      t.action[static_cast<std::size_t>(span->at("zy"))] = g;
      span_diagrams.push_back(t);
    }
  out.push_back(run_shape("fibred-sum", span, true, span_diagrams));

  auto pp = fixtures::parallel_pair();
  std::vector<FunctorTable> pp_diagrams;
  for (Mor u = 0; u < static_cast<Mor>(c.size()); ++u)
    for (Mor v = 0; v < static_cast<Mor>(c.size()); ++v) {
      if (c.src(u) != c.src(v) || c.tgt(u) != c.tgt(v)) continue;
      FunctorTable t{pp, cat, std::vector<Mor>(pp->size(), -1)};
      t.action[static_cast<std::size_t>(pp->at("a"))] = c.src(u);
      t.action[static_cast<std::size_t>(pp->at("b"))] = c.tgt(u);
      t.action[static_cast<std::size_t>(pp->at("u"))] = u;
      t.action[static_cast<std::size_t>(pp->at("v"))] = v;
      pp_diagrams.push_back(t);
    }
  out.push_back(run_shape("difference-kernel", pp, false, pp_diagrams));
  out.push_back(run_shape("difference-cokernel", pp, true, pp_diagrams));
  return out;
}

std::vector<NatTransTable> enumerate_nat_trans(const FunctorTable& f, const FunctorTable& g,
                                               std::size_t cap) {
  if (f.source != g.source || f.target != g.target)
    throw PreconditionError("nat trans endpoints mismatch");
  const auto& c = *f.source;
  const auto& d = *f.target;
  auto obs = c.objects();
  std::vector<NatTransTable> out;
  std::vector<Mor> comps(obs.size(), -1);
  std::size_t explored = 0;

  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == obs.size()) {
      out.push_back(NatTransTable{f, g, comps});
      return;
    }
    Mor x = obs[k];
    auto cands = d.hom(f(x), g(x));  // already in index order = name order
    for (Mor cand : cands) {
      if (++explored > cap) throw CapExceededError("natural transformation space exceeds cap");
      comps[k] = cand;
      bool ok = true;
      for (Mor m = 0; m < static_cast<Mor>(c.size()) && ok; ++m) {
        Mor sx = c.src(m), tx = c.tgt(m);
        auto ps = std::lower_bound(obs.begin(), obs.end(), sx) - obs.begin();
        auto pt = std::lower_bound(obs.begin(), obs.end(), tx) - obs.begin();
        if (comps[static_cast<std::size_t>(ps)] < 0 || comps[static_cast<std::size_t>(pt)] < 0)
          continue;
        auto lhs = d.compose(g(m), comps[static_cast<std::size_t>(ps)]);
        auto rhs = d.compose(comps[static_cast<std::size_t>(pt)], f(m));
        if (!lhs || !rhs || *lhs != *rhs) ok = false;
      }
      if (ok) rec(k + 1);
    }
    comps[k] = -1;
  };
  rec(0);
  return out;
}

std::optional<AdjunctionWitness> find_adjunction(const FunctorTable& f, const FunctorTable& g,
                                                 std::size_t cap) {
  if (f.source != g.target || f.target != g.source)
    throw PreconditionError("adjunction candidates must run in opposite directions");
  CatPtr c = f.source;
  CatPtr d = f.target;
  auto gf = compose_functors(g, f);
  auto fg = compose_functors(f, g);

  auto units = enumerate_nat_trans(identity_functor(c), gf, cap);
  auto counits = enumerate_nat_trans(fg, identity_functor(d), cap);

  for (const auto& eta : units)
    for (const auto& eps : counits) {
      // triangle identities: eps_{FX} . F(eta_X) = id_{FX}; G(eps_Y) . eta_{GY} = id_{GY}
      bool ok = true;
      for (Mor x : c->objects()) {
        auto comp = d->compose(eps.at_object(f(x)), f(eta.at_object(x)));
        if (!comp || *comp != f(x)) {
          ok = false;
          break;
        }
      }
      for (Mor y : d->objects()) {
        if (!ok) break;
        auto comp = c->compose(g(eps.at_object(y)), eta.at_object(g(y)));
        if (!comp || *comp != g(y)) ok = false;
      }
      if (ok) return AdjunctionWitness{eta.components, eps.components};
    }
  return std::nullopt;
}

}  // namespace catstar
