#include "doctest.h"

#include <set>

#include "catstar/fibration.hpp"
#include "catstar/fixtures.hpp"

using namespace catstar;

namespace {

// Definitional oracle for cartesianness, straight from the prose: iterate
// every factorization problem and count fillers.
bool cartesian_oracle(const FibrationData& fib, Mor alpha) {
  const auto& t = *fib.total;
  const auto& b = *fib.base;
  for (Mor xp : t.objects())
    for (Mor u = 0; u < static_cast<Mor>(t.size()); ++u) {
      if (t.src(u) != xp || t.tgt(u) != t.tgt(alpha)) continue;
      for (Mor beta = 0; beta < static_cast<Mor>(b.size()); ++beta) {
        auto comp = b.compose(fib.projection(alpha), beta);
        if (!comp || *comp != fib.projection(u)) continue;
        if (b.src(beta) != fib.projection(xp)) continue;
        int fillers = 0;
        for (Mor bar = 0; bar < static_cast<Mor>(t.size()); ++bar) {
          if (t.src(bar) != xp || t.tgt(bar) != t.src(alpha)) continue;
          if (fib.projection(bar) != beta) continue;
          auto cu = t.compose(alpha, bar);
          if (cu && *cu == u) ++fillers;
        }
        if (fillers != 1) return false;
      }
    }
  return true;
}

ModuleFibration small_fib() {
  return build_module_fibration({builtin_ring("F2"), builtin_ring("Z4")}, 4);
}

}  // namespace

TEST_CASE("identity fibration: every fibre is one object, everything cartesian") {
  auto c = fixtures::divisibility(6);
  FibrationData fib{c, c, identity_functor(c)};
  for (Mor s : c->objects()) {
    auto fr = fibre(fib, s);
    CHECK(fr.cat->objects().size() == 1);
    CHECK(fr.cat->size() == 1);
  }
  for (Mor f = 0; f < static_cast<Mor>(c->size()); ++f) CHECK(is_cartesian(fib, f).cartesian);
  CHECK(is_fibration(fib).ok);
}

TEST_CASE("module fibration over {F2, Z4}: structure and fibres") {
  auto mf = small_fib();
  const auto& t = *mf.data.total;
  CHECK(check_axioms(*mf.data.total).pass());
  CHECK(check_axioms(*mf.data.base).pass());
  REQUIRE(mf.data.valid());

  // ring hom counts: Z4 -> F2 exactly one, F2 -> Z4 none
  CHECK(mf.data.base->hom(mf.data.base->at("Z4"), mf.data.base->at("Z2")).size() == 1);
  CHECK(mf.data.base->hom(mf.data.base->at("Z2"), mf.data.base->at("Z4")).empty());

  // fibre over Z4 is the Z4 module fragment: same object count and hom sizes
  auto frz4 = fibre(mf.data, mf.data.base->at("Z4"));
  ModuleFragment frag(builtin_ring("Z4"), 4);
  CHECK(frz4.cat->objects().size() == static_cast<std::size_t>(frag.object_count()));
  std::multiset<std::size_t> fibre_hom_sizes, frag_hom_sizes;
  for (Mor x : frz4.cat->objects())
    for (Mor y : frz4.cat->objects()) fibre_hom_sizes.insert(frz4.cat->hom(x, y).size());
  for (int a = 0; a < frag.object_count(); ++a)
    for (int b = 0; b < frag.object_count(); ++b) frag_hom_sizes.insert(frag.homs(a, b).size());
  CHECK(fibre_hom_sizes == frag_hom_sizes);

  // a fibre over an object with no lifts is empty: no such ring here, but the
  // zero-module-only check still exercises the path
  (void)t;
}

TEST_CASE("module fibration is a fibration and passes the over-base checks") {
  auto mf = small_fib();
  CHECK(is_fibration(mf.data).ok);
  auto add = check_additive_over_base(mf.data, mf.addition);
  INFO(std::string(add.failures.empty() ? "" : add.failures.front()));
  CHECK(add.pass);
  auto ab = check_abelian_over_base(mf.data, mf.addition);
  INFO(std::string(ab.failures.empty() ? "" : ab.failures.front()));
  CHECK(ab.pass);
}

TEST_CASE("is_cartesian agrees with the definitional oracle on the whole fixture") {
  auto mf = small_fib();
  for (Mor f = 0; f < static_cast<Mor>(mf.data.total->size()); ++f) {
    INFO(mf.data.total->name(f));
    CHECK(is_cartesian(mf.data, f).cartesian == cartesian_oracle(mf.data, f));
  }
}

TEST_CASE("restriction of scalars is the cartesian lift over Z4 -> F2") {
  auto mf = small_fib();
  const auto& t = *mf.data.total;
  const auto& b = *mf.data.base;
  // alpha: the unique non-identity Z4 -> Z2
  Mor alpha = b.hom(b.at("Z4"), b.at("Z2")).front();
  Mor y = t.at("(Z2,Z2)");
  auto lift = cartesian_lift(mf.data, alpha, y);
  REQUIRE(lift.has_value());
  CHECK(t.name(t.src(*lift)) == "(Z4,Z2)");
  CHECK(is_cartesian(mf.data, *lift).cartesian);

  // identity base morphism lifts through the identity
  Mor idz4 = b.at("Z4");
  auto idlift = cartesian_lift(mf.data, idz4, t.at("(Z4,Z4)"));
  REQUIRE(idlift.has_value());
  CHECK(is_cartesian(mf.data, *idlift).cartesian);

  // the zero map over alpha into a nonzero module is not cartesian
  for (Mor g = 0; g < static_cast<Mor>(t.size()); ++g) {
    if (mf.data.projection(g) != alpha || t.tgt(g) != y) continue;
    bool zero_map = true;
    // zero map: factors through the zero module object of the target fibre
    // or equivalently composes with nothing nontrivially; identify by name
    // of source: pick the source (Z4,Z2) and the non-identity candidates
    if (t.name(t.src(g)) == "(Z4,Z2)" && !(g == *lift)) {
      (void)zero_map;
      CHECK_FALSE(is_cartesian(mf.data, g).cartesian);
    }
  }
}

TEST_CASE("deleting the lift source breaks the fibration with a witness") {
  auto mf = small_fib();
  const auto& t = *mf.data.total;
  // drop the object (Z4,Z2) wholesale
  std::vector<Mor> objs;
  for (Mor o : t.objects())
    if (t.name(o) != "(Z4,Z2)") objs.push_back(o);
  auto trimmed = full_subcategory(t, objs);
  FunctorTable proj{trimmed, mf.data.base, std::vector<Mor>(trimmed->size(), -1)};
  for (Mor f = 0; f < static_cast<Mor>(trimmed->size()); ++f)
    proj.action[static_cast<std::size_t>(f)] =
        mf.data.projection(t.at(trimmed->name(f)));
  FibrationData broken{trimmed, mf.data.base, proj};
  REQUIRE(broken.valid());
  auto chk = is_fibration(broken);
  CHECK_FALSE(chk.ok);
  REQUIRE(chk.failing.has_value());
  // the failing pair projects the missing restriction problem
  CHECK(mf.data.base->name(chk.failing->first) != "");
}

TEST_CASE("cartesian lifts are unique up to unique vertical isomorphism") {
  auto mf = small_fib();
  const auto& t = *mf.data.total;
  const auto& b = *mf.data.base;
  for (Mor alpha = 0; alpha < static_cast<Mor>(b.size()); ++alpha)
    for (Mor y : t.objects()) {
      if (mf.data.projection(y) != b.tgt(alpha)) continue;
      std::vector<Mor> lifts;
      for (Mor g = 0; g < static_cast<Mor>(t.size()); ++g)
        if (t.tgt(g) == y && mf.data.projection(g) == alpha && is_cartesian(mf.data, g).cartesian)
          lifts.push_back(g);
      for (Mor g1 : lifts)
        for (Mor g2 : lifts) {
          // exactly one vertical v : src(g2) -> src(g1) with g1.v = g2
          int count = 0;
          Mor found = -1;
          for (Mor v : t.hom(t.src(g2), t.src(g1))) {
            if (mf.data.projection(v) != b.src(alpha)) continue;  // vertical over src
            if (!b.is_object(mf.data.projection(v))) continue;
            auto comp = t.compose(g1, v);
            if (comp && *comp == g2) {
              ++count;
              found = v;
            }
          }
          CHECK(count == 1);
          if (count == 1 && g1 != g2) {
            auto frs = fibre(mf.data, b.src(alpha));
            Mor vf = frs.cat->at(t.name(found));
            CHECK(classify_morphism(*frs.cat, vf).iso);
          }
        }
    }
}

TEST_CASE("composites of cartesian morphisms over composable bases are cartesian") {
  auto mf = small_fib();
  const auto& t = *mf.data.total;
  int checked = 0;
  for (Mor g = 0; g < static_cast<Mor>(t.size()); ++g) {
    if (!is_cartesian(mf.data, g).cartesian) continue;
    for (Mor f = 0; f < static_cast<Mor>(t.size()); ++f) {
      if (t.src(g) != t.tgt(f)) continue;
      if (!is_cartesian(mf.data, f).cartesian) continue;
      auto comp = t.compose(g, f);
      REQUIRE(comp.has_value());
      CHECK(is_cartesian(mf.data, *comp).cartesian);
      ++checked;
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("fibre before and after renaming constants agree") {
  auto mf = small_fib();
  const auto& t = *mf.data.total;
  const auto& b = *mf.data.base;
  auto ren = [](const std::string& s) { return "r_" + s; };
  // rebuild both categories with renamed morphisms
  auto rename_cat = [&](const ExplicitCategory& c) {
    std::vector<std::string> names;
    std::map<std::string, std::string> src, tgt;
    std::vector<std::array<std::string, 3>> comps;
    for (Mor f = 0; f < static_cast<Mor>(c.size()); ++f) {
      names.push_back(ren(c.name(f)));
      src[ren(c.name(f))] = ren(c.name(c.src(f)));
      tgt[ren(c.name(f))] = ren(c.name(c.tgt(f)));
    }
    for (const auto& tr : c.triples())
      comps.push_back({ren(c.name(tr[0])), ren(c.name(tr[1])), ren(c.name(tr[2]))});
    return ExplicitCategory::make(names, src, tgt, comps);
  };
  auto rt = rename_cat(t);
  auto rb = rename_cat(b);
  FunctorTable rproj{rt, rb, std::vector<Mor>(rt->size(), -1)};
  for (Mor f = 0; f < static_cast<Mor>(rt->size()); ++f) {
    auto orig = rt->name(f).substr(2);
    rproj.action[static_cast<std::size_t>(f)] = rb->at(ren(b.name(mf.data.projection(t.at(orig)))));
  }
  FibrationData rfib{rt, rb, rproj};
  REQUIRE(rfib.valid());
  for (Mor s : b.objects()) {
    auto f1 = fibre(mf.data, s);
    auto f2 = fibre(rfib, rb->at(ren(b.name(s))));
    REQUIRE(f1.cat->size() == f2.cat->size());
    for (Mor m = 0; m < static_cast<Mor>(f1.cat->size()); ++m)
      CHECK(ren(f1.cat->name(m)) == f2.cat->name(m));
    CHECK(f1.cat->triples().size() == f2.cat->triples().size());
  }
}

TEST_CASE("fibre limits: kernels exist in every module fibre") {
  auto mf = small_fib();
  auto rows = fibre_limits(mf.data, "difference-kernel");
  for (const auto& row : rows) {
    REQUIRE(row.items.size() == 1);
    CHECK(row.items.front().has);
  }
}

TEST_CASE("corrupting one addition triple produces a biadditivity failure") {
  auto mf = small_fib();
  auto bad = mf.addition;
  // retarget the first non-diagonal sum to a wrong morphism in the same set
  for (auto& tr : bad.triples) {
    if (tr[0] != tr[1]) {
      const auto& t = *mf.data.total;
      for (Mor other = 0; other < static_cast<Mor>(t.size()); ++other) {
        if (other != tr[2] && t.src(other) == t.src(tr[2]) && t.tgt(other) == t.tgt(tr[2]) &&
            mf.data.projection(other) == mf.data.projection(tr[2])) {
          tr[2] = other;
          goto mutated;
        }
      }
    }
  }
mutated:
  auto rep = check_additive_over_base(mf.data, bad);
  CHECK_FALSE(rep.pass);
}

TEST_CASE("single-ring fibration is the module fragment in disguise") {
  auto mf = build_module_fibration({builtin_ring("Z4")}, 4);
  CHECK(is_fibration(mf.data).ok);
  CHECK(mf.data.base->objects().size() == 1);
  auto fr = fibre(mf.data, mf.data.base->objects().front());
  ModuleFragment frag(builtin_ring("Z4"), 4);
  CHECK(fr.cat->objects().size() == static_cast<std::size_t>(frag.object_count()));
}

TEST_CASE("fibre over an object with no lifts is empty, and fibre_limits is vacuous") {
  auto total = fixtures::terminal();
  auto base = fixtures::walking_arrow();
  FunctorTable proj{total, base, std::vector<Mor>(total->size(), base->at("a"))};
  REQUIRE(proj.valid());
  FibrationData fib{total, base, proj};
  auto fr = fibre(fib, base->at("b"));
  CHECK(fr.cat->objects().empty());
  auto rows = fibre_limits(fib, "difference-kernel");
  for (const auto& row : rows)
    if (base->name(row.base_object) == "b") CHECK(row.items.empty());
}

TEST_CASE("morphism classification matches its oracle on the fibration total category") {
  auto mf = small_fib();
  const auto& t = *mf.data.total;
  // the definitional oracle, re-stated over compose()
  for (Mor f = 0; f < static_cast<Mor>(t.size()); ++f) {
    auto got = classify_morphism(t, f);
    bool iso = false;
    for (Mor g = 0; g < static_cast<Mor>(t.size()); ++g) {
      if (t.src(g) != t.tgt(f) || t.tgt(g) != t.src(f)) continue;
      auto fg = t.compose(f, g), gf = t.compose(g, f);
      if (fg && gf && t.is_object(*fg) && t.is_object(*gf)) iso = true;
    }
    CHECK(got.iso == iso);
  }
}
