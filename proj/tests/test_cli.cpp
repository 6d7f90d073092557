#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <unistd.h>

#include "catstar/category_io.hpp"
#include "catstar/cli.hpp"
#include "catstar/fibration.hpp"
#include "catstar/fixtures.hpp"

using namespace catstar;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("catstar_cli_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name, const std::string& content) {
    auto p = path / name;
    std::ofstream f(p);
    f << content;
    return p.string();
  }
};

}  // namespace

TEST_CASE("check exit codes: pass, axiom failure, structural error") {
  TempDir tmp;
  auto good = tmp.file("good.cat", print_category(*fixtures::divisibility(12)));
  auto r0 = cli::run({"check", "--kind", "category", good});
  CHECK(r0.exit_code == 0);

  // corrupt one comp line: retarget a composite
  auto text = print_category(*fixtures::walking_arrow());
  auto pos = text.find("comp f a = f");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 12, "comp f a = a");
  auto bad = tmp.file("bad.cat", text);
  auto r1 = cli::run({"check", "--kind", "category", bad});
  CHECK(r1.exit_code == 1);
  CHECK(r1.human.find("clause") != std::string::npos);

  auto r2 = cli::run({"check", "--kind", "category", (tmp.path / "missing.cat").string()});
  CHECK(r2.exit_code == 2);

  // unparseable line
  auto ugly = tmp.file("ugly.cat", "morph f a b\n");
  CHECK(cli::run({"check", "--kind", "category", ugly}).exit_code == 2);
}

TEST_CASE("reports are byte-identical across repeated runs") {
  TempDir tmp;
  auto good = tmp.file("div.cat", print_category(*fixtures::divisibility(12)));
  auto a = cli::run({"check", "--kind", "category", good});
  auto b = cli::run({"check", "--kind", "category", good});
  CHECK(a.json == b.json);
  CHECK(a.human == b.human);

  auto c1 = cli::run({"corpus", "builtin"});
  auto c2 = cli::run({"corpus", "builtin"});
  CHECK(c1.json == c2.json);
}

TEST_CASE("limit and colimit through diagram files") {
  TempDir tmp;
  tmp.file("div12.cat", print_category(*fixtures::divisibility(12)));
  tmp.file("cospan.cat", print_category(*fixtures::cospan_index()));
  tmp.file("span.cat", print_category(*fixtures::span_index()));
  auto pb = tmp.file("pb.dgm",
                     "index cospan.cat\ntarget div12.cat\n"
                     "map x -> d4\nmap y -> d6\nmap z -> d12\n"
                     "map xz -> d4|d12\nmap yz -> d6|d12\n");
  auto r = cli::run({"limit", "--diagram", pb});
  CHECK(r.exit_code == 0);
  CHECK(r.human.find("apex d2") != std::string::npos);

  auto po = tmp.file("po.dgm",
                     "index span.cat\ntarget div12.cat\n"
                     "map x -> d2\nmap y -> d3\nmap z -> d1\n"
                     "map zx -> d1|d2\nmap zy -> d1|d3\n");
  auto r2 = cli::run({"colimit", "--diagram", po});
  CHECK(r2.exit_code == 0);
  CHECK(r2.human.find("apex d6") != std::string::npos);
}

TEST_CASE("cone command over a subsystem file") {
  TempDir tmp;
  auto rev = opposite(*fixtures::divisibility(12));
  auto cat = tmp.file("rev.cat", print_category(*rev));
  auto sub = tmp.file("j.sub", "objects: d4 d6\n");
  auto r = cli::run({"cone", "--category", cat, "--subsystem", sub});
  CHECK(r.exit_code == 0);
  CHECK(r.human.find("apex d12") != std::string::npos);

  // non-cofiltered input is a precondition error
  auto disc = tmp.file("disc.cat", print_category(*fixtures::discrete({"x", "y"})));
  auto r2 = cli::run({"cone", "--category", disc, "--subsystem", sub});
  CHECK(r2.exit_code == 2);
}

TEST_CASE("derive command reports Ext groups") {
  auto r = cli::run({"derive", "--ring", "Z4", "--functor", "hom(Z2,-)", "--object", "Z2",
                     "--degree", "3", "--cap", "4"});
  CHECK(r.exit_code == 0);
  CHECK(r.human.find("Z2") != std::string::npos);
}

TEST_CASE("hyper eval certifies primality and flags undecided ones") {
  auto r = cli::run({"hyper", "eval", "--builder", "nth_prime", "--formula", "is_prime(P)",
                     "--window", "100"});
  CHECK(r.exit_code == 0);
  CHECK(r.human.find("True certified") != std::string::npos);

  auto r2 = cli::run({"hyper", "eval", "--bind", "X=omega", "--formula", "even(X)", "--window",
                      "16"});
  CHECK(r2.exit_code == 1);  // genuinely undecided under the honesty rule
  CHECK(r2.human.find("Undecided") != std::string::npos);
}

TEST_CASE("transfer and corpus commands agree and catch faults") {
  TempDir tmp;
  auto emit = cli::run({"corpus", "builtin", "--emit", (tmp.path / "c").string()});
  CHECK(emit.exit_code == 0);
  auto run = cli::run({"corpus", (tmp.path / "c").string()});
  CHECK(run.exit_code == 0);
  for (const auto& fault : {"collapse-atom", "drop-element", "break-units"}) {
    auto bad = cli::run({"corpus", (tmp.path / "c").string(), "--star",
                         (tmp.path / "c" / "faults" / (std::string(fault) + ".star")).string()});
    CHECK(bad.exit_code == 1);
  }
  auto tr = cli::run({"transfer", "--corpus", (tmp.path / "c" / "statements.phi").string()});
  CHECK(tr.exit_code == 0);
}

TEST_CASE("fib check on a generated module fibration") {
  TempDir tmp;
  auto mf = build_module_fibration({builtin_ring("Z2")}, 4);
  tmp.file("total.cat", print_category(*mf.data.total));
  tmp.file("base.cat", print_category(*mf.data.base));
  std::string proj;
  for (Mor f = 0; f < static_cast<Mor>(mf.data.total->size()); ++f)
    proj += "proj " + mf.data.total->name(f) + " -> " +
            mf.data.base->name(mf.data.projection(f)) + "\n";
  auto pf = tmp.file("p.map", proj);
  auto r = cli::run({"fib", "check", "--total", (tmp.path / "total.cat").string(), "--base",
                     (tmp.path / "base.cat").string(), "--proj", pf});
  CHECK(r.exit_code == 0);
}

TEST_CASE("adjoint command finds the identity adjunction") {
  TempDir tmp;
  auto c = fixtures::divisibility(6);
  auto cat = tmp.file("div6.cat", print_category(*c));
  std::string idmap;
  for (Mor f = 0; f < static_cast<Mor>(c->size()); ++f)
    idmap += "map " + c->name(f) + " -> " + c->name(f) + "\n";
  auto fn = tmp.file("id.fun", idmap);
  auto r = cli::run({"adjoint", "--cat-c", cat, "--cat-d", cat, "--left", fn, "--right", fn});
  CHECK(r.exit_code == 0);
  CHECK(r.human.find("PASS adjunction") != std::string::npos);
}

TEST_CASE("hyper eval accepts a formula file") {
  TempDir tmp;
  auto phi = tmp.file("f.phi", "# primality\nis_prime(P)\n");
  auto r = cli::run({"hyper", "eval", "--builder", "nth_prime", "--formula", phi, "--window",
                     "64"});
  CHECK(r.exit_code == 0);
  CHECK(r.human.find("True certified") != std::string::npos);
}
