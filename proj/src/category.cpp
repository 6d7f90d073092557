#include "catstar/category.hpp"

#include <algorithm>
#include <functional>

namespace catstar {

namespace {

std::string triple_str(const ExplicitCategory& c, Mor f, Mor g, Mor h) {
  return "<" + c.name(f) + "," + c.name(g) + "," + c.name(h) + ">";
}

}  // namespace

CatPtr ExplicitCategory::make(const std::vector<std::string>& names,
                              const std::map<std::string, std::string>& src,
                              const std::map<std::string, std::string>& tgt,
                              const std::vector<std::array<std::string, 3>>& comps) {
  std::vector<std::string> sorted = names;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.size() != names.size()) throw StructuralError("duplicate morphism name");

  std::map<std::string, Mor> index;
  for (std::size_t i = 0; i < sorted.size(); ++i) index[sorted[i]] = static_cast<Mor>(i);

  auto resolve_total = [&](const std::map<std::string, std::string>& m, const char* what) {
    std::vector<Mor> out(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      auto it = m.find(sorted[i]);
      if (it == m.end()) throw StructuralError(std::string(what) + " map not total: missing " + sorted[i]);
      auto jt = index.find(it->second);
      if (jt == index.end())
        throw StructuralError(std::string(what) + " of " + sorted[i] + " names unknown morphism " + it->second);
      out[i] = jt->second;
    }
    return out;
  };

  std::vector<Mor> s = resolve_total(src, "src");
  std::vector<Mor> t = resolve_total(tgt, "tgt");

  std::vector<std::array<Mor, 3>> triples;
  std::vector<std::array<std::string, 3>> unresolved;
  for (const auto& tr : comps) {
    auto a = index.find(tr[0]);
    auto b = index.find(tr[1]);
    auto c = index.find(tr[2]);
    if (a == index.end() || b == index.end() || c == index.end()) {
      unresolved.push_back(tr);
    } else {
      triples.push_back({a->second, b->second, c->second});
    }
  }

  auto cat = make_indexed(std::move(sorted), std::move(s), std::move(t), std::move(triples));
  // make_indexed returns a fresh object; attach the unresolved triples.
  auto* mut = const_cast<ExplicitCategory*>(cat.get());
  mut->unresolved_ = std::move(unresolved);
  return cat;
}

CatPtr ExplicitCategory::make_indexed(std::vector<std::string> names, std::vector<Mor> src,
                                      std::vector<Mor> tgt,
                                      std::vector<std::array<Mor, 3>> triples) {
  auto cat = std::shared_ptr<ExplicitCategory>(new ExplicitCategory());
  cat->names_ = std::move(names);
  cat->src_ = std::move(src);
  cat->tgt_ = std::move(tgt);
  std::sort(triples.begin(), triples.end());
  triples.erase(std::unique(triples.begin(), triples.end()), triples.end());
  cat->triples_ = std::move(triples);

  std::set<Mor> obs;
  for (Mor f = 0; f < static_cast<Mor>(cat->names_.size()); ++f) obs.insert(cat->src_[f]);
  cat->objects_.assign(obs.begin(), obs.end());

  for (const auto& tr : cat->triples_) cat->comp_index_[{tr[0], tr[1]}].push_back(tr[2]);
  for (Mor f = 0; f < static_cast<Mor>(cat->names_.size()); ++f) {
    cat->by_src_[cat->src_[static_cast<std::size_t>(f)]].push_back(f);
    cat->by_tgt_[cat->tgt_[static_cast<std::size_t>(f)]].push_back(f);
  }
  return cat;
}

std::optional<Mor> ExplicitCategory::find(std::string_view name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return std::nullopt;
  return static_cast<Mor>(it - names_.begin());
}

Mor ExplicitCategory::at(std::string_view name) const {
  auto m = find(name);
  if (!m) throw StructuralError("unknown morphism: " + std::string(name));
  return *m;
}

std::vector<Mor> ExplicitCategory::hom(Mor x, Mor y) const {
  std::vector<Mor> out;
  auto it = by_src_.find(x);
  if (it == by_src_.end()) return out;
  for (Mor f : it->second)
    if (tgt(f) == y) out.push_back(f);
  return out;
}

const std::vector<Mor>& ExplicitCategory::with_source(Mor x) const {
  static const std::vector<Mor> empty;
  auto it = by_src_.find(x);
  return it == by_src_.end() ? empty : it->second;
}

const std::vector<Mor>& ExplicitCategory::with_target(Mor y) const {
  static const std::vector<Mor> empty;
  auto it = by_tgt_.find(y);
  return it == by_tgt_.end() ? empty : it->second;
}

std::optional<Mor> ExplicitCategory::compose(Mor f, Mor g) const {
  auto it = comp_index_.find({f, g});
  if (it == comp_index_.end() || it->second.size() != 1) return std::nullopt;
  return it->second.front();
}

std::vector<Mor> ExplicitCategory::composites(Mor f, Mor g) const {
  auto it = comp_index_.find({f, g});
  if (it == comp_index_.end()) return {};
  return it->second;
}

bool ExplicitCategory::has_triple(Mor f, Mor g, Mor h) const {
  auto it = comp_index_.find({f, g});
  if (it == comp_index_.end()) return false;
  return std::find(it->second.begin(), it->second.end(), h) != it->second.end();
}

bool ExplicitCategory::operator==(const ExplicitCategory& other) const {
  return names_ == other.names_ && src_ == other.src_ && tgt_ == other.tgt_ &&
         triples_ == other.triples_ && unresolved_ == other.unresolved_;
}

ValidationReport check_axioms(const ExplicitCategory& cat) {
  ValidationReport rep;
  for (const auto& tr : cat.unresolved())
    rep.structural.push_back("comp triple references unknown morphism: <" + tr[0] + "," + tr[1] +
                             "," + tr[2] + ">");

  const Mor n = static_cast<Mor>(cat.size());
  // (ii) ss = ts = s and st = tt = t as maps on M
  for (Mor f = 0; f < n; ++f) {
    if (cat.src(cat.src(f)) != cat.src(f))
      rep.violations.push_back({"ii-ss", {cat.name(f)}, "s(s f) != s f"});
    if (cat.src(cat.tgt(f)) != cat.tgt(f))
      rep.violations.push_back({"ii-st", {cat.name(f)}, "s(t f) != t f"});
    if (cat.tgt(cat.src(f)) != cat.src(f))
      rep.violations.push_back({"ii-ts", {cat.name(f)}, "t(s f) != s f"});
    if (cat.tgt(cat.tgt(f)) != cat.tgt(f))
      rep.violations.push_back({"ii-tt", {cat.name(f)}, "t(t f) != t f"});
  }

  // (iii)(1) every triple has matching endpoints
  for (const auto& tr : cat.triples()) {
    Mor f = tr[0], g = tr[1], h = tr[2];
    if (cat.src(f) != cat.tgt(g) || cat.tgt(f) != cat.tgt(h) || cat.src(g) != cat.src(h))
      rep.violations.push_back(
          {"iii-1", {cat.name(f), cat.name(g), cat.name(h)}, "endpoint mismatch in " + triple_str(cat, f, g, h)});
  }

  // (iii)(2) composable pairs have exactly one composite
  for (Mor f = 0; f < n; ++f)
    for (Mor g = 0; g < n; ++g) {
      if (cat.src(f) != cat.tgt(g)) continue;
      auto hs = cat.composites(f, g);
      if (hs.empty())
        rep.violations.push_back(
            {"iii-2-none", {cat.name(f), cat.name(g)}, "no composite for composable pair"});
      else if (hs.size() > 1)
        rep.violations.push_back(
            {"iii-2-multi", {cat.name(f), cat.name(g)}, "multiple composites for pair"});
    }

  // (iv) unit triples: f.id_{sf} = f and id_{tf}.f = f
  for (Mor f = 0; f < n; ++f) {
    if (!cat.has_triple(f, cat.src(f), f))
      rep.violations.push_back({"iv", {cat.name(f)}, "missing " + triple_str(cat, f, cat.src(f), f)});
    if (!cat.has_triple(cat.tgt(f), f, f))
      rep.violations.push_back({"iv", {cat.name(f)}, "missing " + triple_str(cat, cat.tgt(f), f, f)});
  }

  // (v) associativity closure
  for (const auto& t1 : cat.triples()) {
    Mor f1 = t1[0], f2 = t1[1], f12 = t1[2];
    for (Mor f3 = 0; f3 < n; ++f3) {
      for (Mor f123 : cat.composites(f12, f3)) {
        for (Mor f23 : cat.composites(f2, f3)) {
          if (!cat.has_triple(f1, f23, f123))
            rep.violations.push_back({"v",
                                      {cat.name(f1), cat.name(f2), cat.name(f3)},
                                      "missing " + triple_str(cat, f1, f23, f123)});
        }
      }
    }
  }
  return rep;
}

bool FunctorTable::valid() const {
  if (!source || !target) return false;
  if (action.size() != source->size()) return false;
  const Mor n = static_cast<Mor>(source->size());
  for (Mor f = 0; f < n; ++f) {
    Mor ff = action[static_cast<std::size_t>(f)];
    if (ff < 0 || ff >= static_cast<Mor>(target->size())) return false;
    if ((*this)(source->src(f)) != target->src(ff)) return false;
    if ((*this)(source->tgt(f)) != target->tgt(ff)) return false;
  }
  for (const auto& tr : source->triples())
    if (!target->has_triple((*this)(tr[0]), (*this)(tr[1]), (*this)(tr[2]))) return false;
  return true;
}

bool FunctorTable::operator==(const FunctorTable& other) const {
  return source == other.source && target == other.target && action == other.action;
}

FunctorTable identity_functor(CatPtr c) {
  FunctorTable f{c, c, {}};
  f.action.resize(c->size());
  for (std::size_t i = 0; i < c->size(); ++i) f.action[i] = static_cast<Mor>(i);
  return f;
}

FunctorTable compose_functors(const FunctorTable& g, const FunctorTable& f) {
  if (f.target != g.source) throw PreconditionError("functor composition endpoint mismatch");
  FunctorTable out{f.source, g.target, {}};
  out.action.resize(f.action.size());
  for (std::size_t i = 0; i < f.action.size(); ++i) out.action[i] = g(f.action[i]);
  return out;
}

Mor NatTransTable::at_object(Mor x) const {
  const auto& obs = F.source->objects();
  auto it = std::lower_bound(obs.begin(), obs.end(), x);
  if (it == obs.end() || *it != x) throw PreconditionError("not an object of the source");
  return components[static_cast<std::size_t>(it - obs.begin())];
}

bool NatTransTable::valid() const {
  if (F.source != G.source || F.target != G.target) return false;
  const auto& obs = F.source->objects();
  if (components.size() != obs.size()) return false;
  const auto& d = *F.target;
  for (std::size_t i = 0; i < obs.size(); ++i) {
    Mor x = obs[i], cx = components[i];
    if (d.src(cx) != F(x) || d.tgt(cx) != G(x)) return false;
  }
  // naturality: G f . c_X = c_Y . F f for every f : X -> Y
  for (Mor f = 0; f < static_cast<Mor>(F.source->size()); ++f) {
    Mor x = F.source->src(f), y = F.source->tgt(f);
    auto lhs = d.compose(G(f), at_object(x));
    auto rhs = d.compose(at_object(y), F(f));
    if (!lhs || !rhs || *lhs != *rhs) return false;
  }
  return true;
}

CatPtr from_obj_hom(const ObjHomCategory& d) {
  std::vector<std::string> names;
  std::map<std::string, std::string> src, tgt;
  std::set<std::string> seen;
  for (const auto& [xy, fs] : d.hom) {
    for (const auto& f : fs) {
      if (!seen.insert(f).second) throw StructuralError("hom-sets not disjoint: " + f);
      auto ix = d.identities.find(xy.first), iy = d.identities.find(xy.second);
      if (ix == d.identities.end() || iy == d.identities.end())
        throw StructuralError("hom-set references object without identity");
      names.push_back(f);
      src[f] = ix->second;
      tgt[f] = iy->second;
    }
  }
  for (const auto& [x, idx] : d.identities)
    if (!seen.count(idx)) throw StructuralError("identity of " + x + " not in any hom-set");

  std::vector<std::array<std::string, 3>> comps;
  for (const auto& [fg, h] : d.compose) comps.push_back({fg.first, fg.second, h});
  // unit triples per the disjoint-union construction
  for (const auto& n : names) {
    comps.push_back({n, src[n], n});
    comps.push_back({tgt[n], n, n});
  }
  return ExplicitCategory::make(names, src, tgt, comps);
}

ObjHomCategory to_obj_hom(const ExplicitCategory& c) {
  ObjHomCategory d;
  for (Mor x : c.objects()) {
    d.objects.push_back(c.name(x));
    d.identities[c.name(x)] = c.name(x);
  }
  for (Mor x : c.objects())
    for (Mor y : c.objects()) {
      auto fs = c.hom(x, y);
      if (fs.empty()) continue;
      auto& bucket = d.hom[{c.name(x), c.name(y)}];
      for (Mor f : fs) bucket.push_back(c.name(f));
    }
  for (const auto& tr : c.triples()) {
    if (c.is_object(tr[1]) || c.is_object(tr[0])) continue;  // identity composites are implicit
    d.compose[{c.name(tr[0]), c.name(tr[1])}] = c.name(tr[2]);
  }
  return d;
}

CatPtr opposite(const ExplicitCategory& c) {
  std::vector<std::array<Mor, 3>> triples;
  triples.reserve(c.triples().size());
  for (const auto& tr : c.triples()) triples.push_back({tr[1], tr[0], tr[2]});
  std::vector<Mor> s, t;
  for (Mor f = 0; f < static_cast<Mor>(c.size()); ++f) {
    s.push_back(c.tgt(f));
    t.push_back(c.src(f));
  }
  return ExplicitCategory::make_indexed(c.names(), std::move(s), std::move(t), std::move(triples));
}

CatPtr product(const ExplicitCategory& a, const ExplicitCategory& b) {
  std::vector<std::string> names;
  std::map<std::string, std::string> src, tgt;
  auto pname = [&](Mor f, Mor g) { return "(" + a.name(f) + "," + b.name(g) + ")"; };
  for (Mor f = 0; f < static_cast<Mor>(a.size()); ++f)
    for (Mor g = 0; g < static_cast<Mor>(b.size()); ++g) {
      names.push_back(pname(f, g));
      src[pname(f, g)] = pname(a.src(f), b.src(g));
      tgt[pname(f, g)] = pname(a.tgt(f), b.tgt(g));
    }
  std::vector<std::array<std::string, 3>> comps;
  for (const auto& ta : a.triples())
    for (const auto& tb : b.triples())
      comps.push_back({pname(ta[0], tb[0]), pname(ta[1], tb[1]), pname(ta[2], tb[2])});
  return ExplicitCategory::make(names, src, tgt, comps);
}

namespace {

// Enumerates all functor actions C -> D by backtracking in morphism order.
void enumerate_functors(const ExplicitCategory& c, const ExplicitCategory& d,
                        const std::function<void(const std::vector<Mor>&)>& emit) {
  const Mor n = static_cast<Mor>(c.size());
  const Mor m = static_cast<Mor>(d.size());
  std::vector<Mor> action(static_cast<std::size_t>(n), -1);

  std::function<bool(Mor)> consistent = [&](Mor upto) {
    Mor f = upto;
    // s/t compatibility for every assigned morphism whose s/t images are known
    for (Mor g = 0; g <= upto; ++g) {
      (void)g;
    }
    // local checks only for the newly assigned f
    Mor sf = c.src(f), tf = c.tgt(f);
    if (action[static_cast<std::size_t>(sf)] >= 0 &&
        action[static_cast<std::size_t>(sf)] != d.src(action[static_cast<std::size_t>(f)]))
      return false;
    if (action[static_cast<std::size_t>(tf)] >= 0 &&
        action[static_cast<std::size_t>(tf)] != d.tgt(action[static_cast<std::size_t>(f)]))
      return false;
    // reverse direction: f may itself be the source/target of assigned ones
    for (Mor g = 0; g < n; ++g) {
      Mor ag = action[static_cast<std::size_t>(g)];
      if (ag < 0) continue;
      if (c.src(g) == f && d.src(ag) != action[static_cast<std::size_t>(f)]) return false;
      if (c.tgt(g) == f && d.tgt(ag) != action[static_cast<std::size_t>(f)]) return false;
    }
    // triple preservation for fully assigned triples
    for (const auto& tr : c.triples()) {
      Mor a0 = action[static_cast<std::size_t>(tr[0])];
      Mor a1 = action[static_cast<std::size_t>(tr[1])];
      Mor a2 = action[static_cast<std::size_t>(tr[2])];
      if (a0 >= 0 && a1 >= 0 && a2 >= 0 && !d.has_triple(a0, a1, a2)) return false;
    }
    return true;
  };

  std::function<void(Mor)> rec = [&](Mor f) {
    if (f == n) {
      emit(action);
      return;
    }
    for (Mor img = 0; img < m; ++img) {
      action[static_cast<std::size_t>(f)] = img;
      if (consistent(f)) rec(f + 1);
    }
    action[static_cast<std::size_t>(f)] = -1;
  };
  rec(0);
}

}  // namespace

FunctorCategoryResult functor_category(CatPtr c, CatPtr d, std::size_t cap) {
  FunctorCategoryResult out;
  std::vector<std::vector<Mor>> actions;
  enumerate_functors(*c, *d, [&](const std::vector<Mor>& a) { actions.push_back(a); });
  std::sort(actions.begin(), actions.end());

  std::vector<FunctorTable> fs;
  fs.reserve(actions.size());
  for (auto& a : actions) fs.push_back(FunctorTable{c, d, a});

  // enumerate natural families for each ordered pair of functors
  const auto& obs = c->objects();
  struct Entry {
    std::size_t fi, gi;
    std::vector<Mor> comps;
  };
  std::vector<Entry> nats;
  for (std::size_t fi = 0; fi < fs.size(); ++fi)
    for (std::size_t gi = 0; gi < fs.size(); ++gi) {
      std::vector<Mor> comps(obs.size(), -1);
      std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == obs.size()) {
          NatTransTable nt{fs[fi], fs[gi], comps};
          if (nt.valid()) nats.push_back({fi, gi, comps});
          return;
        }
        Mor x = obs[k];
        for (Mor cand : d->hom(fs[fi](x), fs[gi](x))) {
          comps[k] = cand;
          // partial naturality against already fixed components
          bool ok = true;
          for (Mor f = 0; f < static_cast<Mor>(c->size()) && ok; ++f) {
            Mor sx = c->src(f), tx = c->tgt(f);
            auto pos_s = std::lower_bound(obs.begin(), obs.end(), sx) - obs.begin();
            auto pos_t = std::lower_bound(obs.begin(), obs.end(), tx) - obs.begin();
            if (comps[static_cast<std::size_t>(pos_s)] < 0 || comps[static_cast<std::size_t>(pos_t)] < 0) continue;
            auto lhs = d->compose(fs[gi](f), comps[static_cast<std::size_t>(pos_s)]);
            auto rhs = d->compose(comps[static_cast<std::size_t>(pos_t)], fs[fi](f));
            if (!lhs || !rhs || *lhs != *rhs) ok = false;
          }
          if (ok) rec(k + 1);
        }
        comps[k] = -1;
      };
      rec(0);
      if (nats.size() > cap) throw CapExceededError("functor category exceeds cap");
    }

  if (nats.size() > cap) throw CapExceededError("functor category exceeds cap");

  // name objects F0.. by lexicographic action, morphisms t<k>[Fi=>Fj]
  auto fname = [&](std::size_t i) { return "F" + std::to_string(i); };
  std::vector<std::string> names;
  std::map<std::string, std::string> src, tgt;
  std::vector<std::array<std::string, 3>> comps;

  std::vector<std::string> nat_names(nats.size());
  std::map<std::tuple<std::size_t, std::size_t, std::vector<Mor>>, std::size_t> nat_index;
  std::size_t counter = 0;
  for (std::size_t i = 0; i < nats.size(); ++i) {
    const auto& e = nats[i];
    bool is_id = e.fi == e.gi;
    if (is_id)
      for (std::size_t k = 0; k < obs.size(); ++k)
        if (e.comps[k] != fs[e.fi](obs[k])) {
          is_id = false;
          break;
        }
    nat_names[i] = is_id ? fname(e.fi)
                         : "t" + std::to_string(counter++) + "[" + fname(e.fi) + "=>" + fname(e.gi) + "]";
    nat_index[{e.fi, e.gi, e.comps}] = i;
  }
  for (std::size_t i = 0; i < nats.size(); ++i) {
    names.push_back(nat_names[i]);
    src[nat_names[i]] = fname(nats[i].fi);
    tgt[nat_names[i]] = fname(nats[i].gi);
  }
  // vertical composition: (b . a)_X = b_X . a_X
  for (std::size_t i = 0; i < nats.size(); ++i)
    for (std::size_t j = 0; j < nats.size(); ++j) {
      if (nats[i].fi != nats[j].gi) continue;  // compose nats[j] then nats[i]
      std::vector<Mor> comp(obs.size());
      bool ok = true;
      for (std::size_t k = 0; k < obs.size() && ok; ++k) {
        auto h = d->compose(nats[i].comps[k], nats[j].comps[k]);
        if (!h)
          ok = false;
        else
          comp[k] = *h;
      }
      if (!ok) continue;
      auto it = nat_index.find({nats[j].fi, nats[i].gi, comp});
      if (it == nat_index.end()) continue;
      comps.push_back({nat_names[i], nat_names[j], nat_names[it->second]});
    }

  out.cat = ExplicitCategory::make(names, src, tgt, comps);
  // reorder bookkeeping to the category's sorted morphism order
  out.functors = fs;
  out.transforms.clear();
  out.transforms.reserve(nats.size());
  std::map<std::string, std::size_t> by_name;
  for (std::size_t i = 0; i < nats.size(); ++i) by_name[nat_names[i]] = i;
  for (const auto& nm : out.cat->names()) {
    const auto& e = nats[by_name[nm]];
    out.transforms.push_back(NatTransTable{fs[e.fi], fs[e.gi], e.comps});
  }
  return out;
}

SliceResult slice(CatPtr c, Mor x) {
  if (!c->is_object(x)) throw PreconditionError("slice base is not an object");
  // objects: morphisms a with tgt a = x; morphism (A,a) -> (B,b): g with b.g = a
  std::vector<Mor> slice_objects;
  for (Mor a = 0; a < static_cast<Mor>(c->size()); ++a)
    if (c->tgt(a) == x) slice_objects.push_back(a);

  auto oname = [&](Mor a) { return "[" + c->name(a) + "]"; };
  auto mname = [&](Mor g, Mor a, Mor b) {
    return "[" + c->name(g) + ":" + c->name(a) + "=>" + c->name(b) + "]";
  };

  std::vector<std::string> names;
  std::map<std::string, std::string> src, tgt;
  struct Arrow {
    Mor g, a, b;
    std::string name;
  };
  std::vector<Arrow> arrows;
  for (Mor a : slice_objects)
    for (Mor b : slice_objects)
      for (Mor g : c->hom(c->src(a), c->src(b))) {
        auto comp = c->compose(b, g);
        if (!comp || *comp != a) continue;
        std::string nm = (g == c->src(a) && a == b) ? oname(a) : mname(g, a, b);
        arrows.push_back({g, a, b, nm});
        names.push_back(nm);
        src[nm] = oname(a);
        tgt[nm] = oname(b);
      }

  std::vector<std::array<std::string, 3>> comps;
  for (const auto& p : arrows)
    for (const auto& q : arrows) {
      if (q.b != p.a) continue;  // compose p after q
      auto g = c->compose(p.g, q.g);
      if (!g) continue;
      // result arrow: (q.a, *g, p.b)
      for (const auto& r : arrows)
        if (r.a == q.a && r.b == p.b && r.g == *g) comps.push_back({p.name, q.name, r.name});
    }

  SliceResult out;
  out.cat = ExplicitCategory::make(names, src, tgt, comps);
  for (const auto& p : arrows) {
    Mor idx = out.cat->at(p.name);
    out.underlying[idx] = p.g;
    if (p.name == oname(p.a)) out.object_of[idx] = p.a;
  }
  return out;
}

CatPtr full_subcategory(const ExplicitCategory& c, const std::vector<Mor>& objs) {
  std::set<Mor> obset(objs.begin(), objs.end());
  for (Mor o : objs)
    if (!c.is_object(o)) throw PreconditionError("full_subcategory: not an object");
  std::vector<std::string> names;
  std::map<std::string, std::string> src, tgt;
  std::vector<std::array<std::string, 3>> comps;
  std::set<Mor> keep;
  for (Mor f = 0; f < static_cast<Mor>(c.size()); ++f)
    if (obset.count(c.src(f)) && obset.count(c.tgt(f))) keep.insert(f);
  for (Mor f : keep) {
    names.push_back(c.name(f));
    src[c.name(f)] = c.name(c.src(f));
    tgt[c.name(f)] = c.name(c.tgt(f));
  }
  for (const auto& tr : c.triples())
    if (keep.count(tr[0]) && keep.count(tr[1]) && keep.count(tr[2]))
      comps.push_back({c.name(tr[0]), c.name(tr[1]), c.name(tr[2])});
  return ExplicitCategory::make(names, src, tgt, comps);
}

bool is_sieve(const ExplicitCategory& slice_cat, const ExplicitCategory& sub) {
  // sub must be a full subcategory of slice_cat
  std::set<Mor> sub_objects;
  for (const auto& nm : sub.names()) {
    auto f = slice_cat.find(nm);
    if (!f) throw PreconditionError("subcategory morphism not in slice: " + nm);
  }
  for (Mor o : sub.objects()) {
    auto f = slice_cat.find(sub.name(o));
    if (!slice_cat.is_object(*f)) throw PreconditionError("subcategory object not an object of slice");
    sub_objects.insert(*f);
  }
  // fullness: every slice morphism between sub objects is present in sub
  for (Mor f = 0; f < static_cast<Mor>(slice_cat.size()); ++f) {
    if (!sub_objects.count(slice_cat.src(f)) || !sub_objects.count(slice_cat.tgt(f))) continue;
    if (!sub.find(slice_cat.name(f))) throw PreconditionError("subcategory not full: missing " + slice_cat.name(f));
  }
  // downward closure: any object mapping into a sub object lies in sub
  for (Mor y : slice_cat.objects()) {
    if (sub_objects.count(y)) continue;
    for (Mor r : sub_objects)
      if (!slice_cat.hom(y, r).empty()) return false;
  }
  return true;
}

MorphismClass classify_morphism(const ExplicitCategory& c, Mor f) {
  MorphismClass out;
  const Mor n = static_cast<Mor>(c.size());
  // iso: some g composes to identities both ways
  for (Mor g = 0; g < n && !out.iso; ++g) {
    auto fg = c.compose(f, g);
    auto gf = c.compose(g, f);
    if (fg && gf && c.is_object(*fg) && c.is_object(*gf)) out.iso = true;
  }
  // mono: f.g1 = f.g2 implies g1 = g2
  out.mono = true;
  for (Mor g1 = 0; g1 < n && out.mono; ++g1) {
    if (c.src(f) != c.tgt(g1)) continue;
    for (Mor g2 = 0; g2 < n && out.mono; ++g2) {
      if (c.src(f) != c.tgt(g2) || c.src(g1) != c.src(g2)) continue;
      auto h1 = c.compose(f, g1), h2 = c.compose(f, g2);
      if (h1 && h2 && *h1 == *h2 && g1 != g2) out.mono = false;
    }
  }
  // epi: g1.f = g2.f implies g1 = g2
  out.epi = true;
  for (Mor g1 = 0; g1 < n && out.epi; ++g1) {
    if (c.src(g1) != c.tgt(f)) continue;
    for (Mor g2 = 0; g2 < n && out.epi; ++g2) {
      if (c.src(g2) != c.tgt(f) || c.tgt(g1) != c.tgt(g2)) continue;
      auto h1 = c.compose(g1, f), h2 = c.compose(g2, f);
      if (h1 && h2 && *h1 == *h2 && g1 != g2) out.epi = false;
    }
  }
  return out;
}

std::optional<std::map<Mor, Mor>> find_isomorphism(const ExplicitCategory& a,
                                                   const ExplicitCategory& b) {
  if (a.size() != b.size()) return std::nullopt;
  const Mor n = static_cast<Mor>(a.size());
  std::vector<Mor> img(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);

  auto compatible = [&](Mor f, Mor bf) {
    // endpoints must match where already assigned
    Mor sa = a.src(f), ta = a.tgt(f);
    if (img[static_cast<std::size_t>(sa)] >= 0 && img[static_cast<std::size_t>(sa)] != b.src(bf)) return false;
    if (img[static_cast<std::size_t>(ta)] >= 0 && img[static_cast<std::size_t>(ta)] != b.tgt(bf)) return false;
    for (Mor g = 0; g < n; ++g) {
      Mor ig = img[static_cast<std::size_t>(g)];
      if (ig < 0) continue;
      if (a.src(g) == f && b.src(ig) != bf) return false;
      if (a.tgt(g) == f && b.tgt(ig) != bf) return false;
      // composition triples among assigned morphisms must biject
      auto hab = a.compose(g, f);
      if (a.src(g) == a.tgt(f) && hab && img[static_cast<std::size_t>(*hab)] >= 0) {
        auto hb = b.compose(ig, bf);
        if (!hb || img[static_cast<std::size_t>(*hab)] != *hb) return false;
      }
      auto hba = a.compose(f, g);
      if (a.src(f) == a.tgt(g) && hba && img[static_cast<std::size_t>(*hba)] >= 0) {
        auto hb = b.compose(bf, ig);
        if (!hb || img[static_cast<std::size_t>(*hba)] != *hb) return false;
      }
    }
    // triple membership (handles invalid candidates too)
    for (const auto& tr : a.triples()) {
      Mor i0 = img[static_cast<std::size_t>(tr[0])], i1 = img[static_cast<std::size_t>(tr[1])],
          i2 = img[static_cast<std::size_t>(tr[2])];
      if (i0 >= 0 && i1 >= 0 && i2 >= 0 && !b.has_triple(i0, i1, i2)) return false;
    }
    return true;
  };

  std::function<bool(Mor)> rec = [&](Mor f) -> bool {
    if (f == n) {
      // full check: triple sets correspond exactly
      if (a.triples().size() != b.triples().size()) return false;
      for (const auto& tr : a.triples())
        if (!b.has_triple(img[static_cast<std::size_t>(tr[0])], img[static_cast<std::size_t>(tr[1])],
                          img[static_cast<std::size_t>(tr[2])]))
          return false;
      return true;
    }
    bool f_is_ob = a.is_object(f);
    for (Mor bf = 0; bf < n; ++bf) {
      if (used[static_cast<std::size_t>(bf)]) continue;
      if (f_is_ob != b.is_object(bf)) continue;
      img[static_cast<std::size_t>(f)] = bf;
      used[static_cast<std::size_t>(bf)] = true;
      if (compatible(f, bf) && rec(f + 1)) return true;
      img[static_cast<std::size_t>(f)] = -1;
      used[static_cast<std::size_t>(bf)] = false;
    }
    return false;
  };

  if (!rec(0)) return std::nullopt;
  std::map<Mor, Mor> out;
  for (Mor f = 0; f < n; ++f) out[f] = img[static_cast<std::size_t>(f)];
  return out;
}

}  // namespace catstar
