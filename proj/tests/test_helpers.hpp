#pragma once

#include <random>
#include "catstar/filtered.hpp"
#include <functional>

#include "catstar/category.hpp"
#include "catstar/limits.hpp"

namespace catstar::testing {

// Random poset as a thin category: a random reflexive-transitive relation on
// n objects o0..o<n-1>. Deterministic for a given engine state.
inline CatPtr random_poset(std::mt19937_64& rng, int n, double edge_prob = 0.4) {
  std::vector<std::vector<bool>> le(static_cast<std::size_t>(n),
                                    std::vector<bool>(static_cast<std::size_t>(n), false));
  std::bernoulli_distribution coin(edge_prob);
  for (int i = 0; i < n; ++i) le[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = true;
  // draw a random DAG on the index order, then close transitively
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) le[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (le[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] &&
            le[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)])
          le[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;

  std::vector<std::string> names;
  std::map<std::string, std::string> src, tgt;
  auto obj = [](int i) { return "o" + std::to_string(i); };
  auto arr = [&](int i, int j) { return i == j ? obj(i) : obj(i) + ">" + obj(j); };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!le[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) continue;
      names.push_back(arr(i, j));
      src[arr(i, j)] = obj(i);
      tgt[arr(i, j)] = obj(j);
    }
  std::vector<std::array<std::string, 3>> comps;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!le[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) continue;
      for (int k = 0; k < n; ++k)
        if (le[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)])
          comps.push_back({arr(j, k), arr(i, j), arr(i, k)});
    }
  return ExplicitCategory::make(names, src, tgt, comps);
}

// Random cofiltered poset: random poset plus a bottom element below all.
inline CatPtr random_cofiltered_poset(std::mt19937_64& rng, int n) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    auto cat = random_poset(rng, n);
    if (is_filtered(*cat, Direction::Cofiltered).ok) return cat;
  }
  // force a bottom: chain everything over o0 via transitive closure
  std::vector<std::string> names;
  std::map<std::string, std::string> src, tgt;
  std::vector<std::array<std::string, 3>> comps;
  auto base = random_poset(rng, n - 1);
  // rebuild with an extra bottom object "bot" mapping into every object
  names.assign(base->names().begin(), base->names().end());
  for (Mor f = 0; f < static_cast<Mor>(base->size()); ++f) {
    src[base->name(f)] = base->name(base->src(f));
    tgt[base->name(f)] = base->name(base->tgt(f));
  }
  for (const auto& tr : base->triples())
    comps.push_back({base->name(tr[0]), base->name(tr[1]), base->name(tr[2])});
  names.push_back("bot");
  src["bot"] = "bot";
  tgt["bot"] = "bot";
  comps.push_back({"bot", "bot", "bot"});
  for (Mor o : base->objects()) {
    std::string a = "bot>" + base->name(o);
    names.push_back(a);
    src[a] = "bot";
    tgt[a] = base->name(o);
    comps.push_back({a, "bot", a});
    comps.push_back({base->name(o), a, a});
    for (Mor f = 0; f < static_cast<Mor>(base->size()); ++f)
      if (base->src(f) == o)
        comps.push_back({base->name(f), a, "bot>" + base->name(base->tgt(f))});
  }
  return ExplicitCategory::make(names, src, tgt, comps);
}

// Random functor from a thin index into an arbitrary target: picks a random
// object assignment extendable to morphisms, by backtracking over index
// morphisms; returns nullopt if none exists from the sampled start.
inline std::optional<FunctorTable> random_functor(std::mt19937_64& rng, CatPtr index,
                                                  CatPtr target) {
  const auto& ic = *index;
  const auto& tc = *target;
  std::vector<Mor> action(ic.size(), -1);
  std::uniform_int_distribution<std::size_t> pick(0, tc.size() ? tc.size() - 1 : 0);

  std::function<bool(Mor)> rec = [&](Mor f) -> bool {
    if (f == static_cast<Mor>(ic.size())) {
      FunctorTable ft{index, target, action};
      return ft.valid();
    }
    std::vector<Mor> cands;
    for (Mor img = 0; img < static_cast<Mor>(tc.size()); ++img) cands.push_back(img);
    std::shuffle(cands.begin(), cands.end(), rng);
    for (Mor img : cands) {
      action[static_cast<std::size_t>(f)] = img;
      bool ok = true;
      Mor sf = ic.src(f), tf = ic.tgt(f);
      if (action[static_cast<std::size_t>(sf)] >= 0 &&
          action[static_cast<std::size_t>(sf)] != tc.src(img))
        ok = false;
      if (action[static_cast<std::size_t>(tf)] >= 0 &&
          action[static_cast<std::size_t>(tf)] != tc.tgt(img))
        ok = false;
      for (Mor g = 0; g < static_cast<Mor>(ic.size()) && ok; ++g) {
        Mor ag = action[static_cast<std::size_t>(g)];
        if (ag < 0) continue;
        if (ic.src(g) == f && tc.src(ag) != img) ok = false;
        if (ic.tgt(g) == f && tc.tgt(ag) != img) ok = false;
      }
      for (const auto& tr : ic.triples()) {
        if (!ok) break;
        Mor a0 = action[static_cast<std::size_t>(tr[0])], a1 = action[static_cast<std::size_t>(tr[1])],
            a2 = action[static_cast<std::size_t>(tr[2])];
        if (a0 >= 0 && a1 >= 0 && a2 >= 0 && !tc.has_triple(a0, a1, a2)) ok = false;
      }
      if (ok && rec(f + 1)) return true;
    }
    action[static_cast<std::size_t>(f)] = -1;
    return false;
  };
  if (!rec(0)) return std::nullopt;
  return FunctorTable{index, target, action};
}

}  // namespace catstar::testing

namespace catstar::testing {

// Naive all-cones oracle: full cross-product enumeration without pruning,
// terminal filtering by direct mediator counting.
inline std::optional<ConeWitness> limit_oracle(const DiagramTable& d) {
  const auto& idx = *d.index;
  const auto& c = *d.target;
  auto iobs = idx.objects();
  std::vector<ConeWitness> cones;
  for (Mor apex : c.objects()) {
    std::vector<std::vector<Mor>> cand;
    for (Mor i : iobs) cand.push_back(c.hom(apex, d.functor(i)));
    if (iobs.empty()) {
      cones.push_back(ConeWitness{apex, {}});
      continue;
    }
    bool any = true;
    for (const auto& v : cand)
      if (v.empty()) any = false;
    if (!any) continue;
    std::vector<std::size_t> pick(iobs.size(), 0);
    while (true) {
      ConeWitness w{apex, {}};
      for (std::size_t k = 0; k < iobs.size(); ++k) w.legs[iobs[k]] = cand[k][pick[k]];
      bool commutes = true;
      for (Mor f = 0; f < static_cast<Mor>(idx.size()) && commutes; ++f) {
        auto lhs = c.compose(d.functor(f), w.legs[idx.src(f)]);
        if (!lhs || *lhs != w.legs[idx.tgt(f)]) commutes = false;
      }
      if (commutes) cones.push_back(w);
      std::size_t k = 0;
      while (k < pick.size() && ++pick[k] == cand[k].size()) pick[k++] = 0;
      if (k == pick.size()) break;
    }
  }
  std::vector<ConeWitness> terminal;
  for (const auto& t : cones) {
    bool ok = true;
    for (const auto& other : cones) {
      std::size_t count = 0;
      for (Mor m : c.hom(other.apex, t.apex)) {
        bool med = true;
        for (const auto& [i, leg] : t.legs) {
          auto comp = c.compose(leg, m);
          if (!comp || *comp != other.legs.at(i)) {
            med = false;
            break;
          }
        }
        if (med) ++count;
      }
      if (count != 1) {
        ok = false;
        break;
      }
    }
    if (ok) terminal.push_back(t);
  }
  if (terminal.empty()) return std::nullopt;
  std::sort(terminal.begin(), terminal.end(), [&](const ConeWitness& a, const ConeWitness& b) {
    if (c.name(a.apex) != c.name(b.apex)) return c.name(a.apex) < c.name(b.apex);
    std::vector<std::string> ka, kb;
    for (auto& [i, l] : a.legs) ka.push_back(c.name(l));
    for (auto& [i, l] : b.legs) kb.push_back(c.name(l));
    return ka < kb;
  });
  return terminal.front();
}

// All subsystems of cat with |objects| + |morphisms| <= budget.
inline std::vector<FiniteSubsystem> all_small_subsystems(const ExplicitCategory& cat,
                                                         std::size_t budget) {
  std::vector<FiniteSubsystem> out;
  auto objs = cat.objects();
  std::vector<Mor> nonid;
  for (Mor f = 0; f < static_cast<Mor>(cat.size()); ++f)
    if (!cat.is_object(f)) nonid.push_back(f);

  std::function<void(std::size_t, FiniteSubsystem&)> pick_mors = [&](std::size_t mi,
                                                                     FiniteSubsystem& j) {
    if (j.objects.size() + j.morphisms.size() <= budget) out.push_back(j);
    if (mi == nonid.size() || j.objects.size() + j.morphisms.size() >= budget) return;
    for (std::size_t k = mi; k < nonid.size(); ++k) {
      Mor m = nonid[k];
      bool s_in = false, t_in = false;
      for (Mor o : j.objects) {
        if (cat.src(m) == o) s_in = true;
        if (cat.tgt(m) == o) t_in = true;
      }
      if (!s_in || !t_in) continue;
      j.morphisms.push_back(m);
      pick_mors(k + 1, j);
      j.morphisms.pop_back();
    }
  };
  FiniteSubsystem j;
  std::function<void(std::size_t, FiniteSubsystem&)> rec = [&](std::size_t oi, FiniteSubsystem& s) {
    pick_mors(0, s);
    for (std::size_t k = oi; k < objs.size() && s.objects.size() < budget; ++k) {
      s.objects.push_back(objs[k]);
      rec(k + 1, s);
      s.objects.pop_back();
    }
  };
  rec(0, j);
  return out;
}

}  // namespace catstar::testing
