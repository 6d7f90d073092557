#include "catstar/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "catstar/additive.hpp"
#include "catstar/category_io.hpp"
#include "catstar/corpus.hpp"
#include "catstar/fibration.hpp"
#include "catstar/filtered.hpp"
#include "catstar/hyper.hpp"
#include "catstar/limits.hpp"
#include "catstar/report.hpp"

namespace catstar::cli {

namespace {

RingPtr ring_from_arg(const std::string& arg) {
  if (std::filesystem::exists(arg)) return load_ring_file(arg);
  return builtin_ring(arg);
}

struct DiagramFiles {
  std::string index_path, target_path;
  std::vector<std::pair<std::string, std::string>> maps;
};

DiagramFiles parse_diagram_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StructuralError("cannot open diagram file: " + path);
  DiagramFiles out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head) || head[0] == '#') continue;
    if (head == "index") {
      ls >> out.index_path;
    } else if (head == "target") {
      ls >> out.target_path;
    } else if (head == "map") {
      std::string from, arrow, to;
      if (!(ls >> from >> arrow >> to) || arrow != "->")
        throw ParseError("expected 'map <mor> -> <mor>'", lineno, 1);
      out.maps.emplace_back(from, to);
    } else {
      throw ParseError("unknown diagram declaration " + head, lineno, 1);
    }
  }
  if (out.index_path.empty() || out.target_path.empty())
    throw StructuralError("diagram file needs 'index' and 'target' lines");
  return out;
}

DiagramTable load_diagram(const std::string& path, const std::string& base_dir) {
  auto files = parse_diagram_file(path);
  auto resolve = [&](const std::string& p) {
    std::filesystem::path fp(p);
    if (fp.is_relative()) fp = std::filesystem::path(base_dir) / fp;
    return fp.string();
  };
  DiagramTable d;
  d.index = load_category_file(resolve(files.index_path));
  d.target = load_category_file(resolve(files.target_path));
  FunctorTable f{d.index, d.target, std::vector<Mor>(d.index->size(), -1)};
  for (const auto& [from, to] : files.maps)
    f.action[static_cast<std::size_t>(d.index->at(from))] = d.target->at(to);
  for (std::size_t i = 0; i < f.action.size(); ++i)
    if (f.action[i] < 0)
      throw StructuralError("diagram map not total: missing " + d.index->name(static_cast<Mor>(i)));
  if (!f.valid()) throw StructuralError("diagram map is not a functor");
  d.functor = f;
  return d;
}

InternalInt builder_by_name(const std::string& name) {
  if (name == "nth_prime") return nth_prime();
  if (name == "omega" || name == "identity") return omega();
  if (name == "factorial") return factorial_seq();
  throw StructuralError("unknown builder: " + name);
}

std::string default_slot(const std::string& builder) {
  if (builder == "nth_prime") return "P";
  if (builder == "omega" || builder == "identity") return "W";
  if (builder == "factorial") return "H";
  return "X";
}

void cmd_check(RunReport& rep, const std::string& kind, const std::vector<std::string>& files,
               const std::string& ring_arg, int cap, const std::string& total_path,
               const std::string& base_path, const std::string& proj_path, bool complete) {
  if (kind == "category") {
    if (files.empty()) throw StructuralError("check --kind category needs a category file");
    bool all_pass = true;
    for (const auto& f : files) {
      rep.add_input(f);
      auto cat = load_category_file(f, complete);
      auto r = check_axioms(*cat);
      for (const auto& s : r.structural) rep.add_witness("structural: " + s);
      if (!r.structural.empty()) throw StructuralError(r.structural.front());
      for (const auto& v : r.violations) {
        std::string w = "clause " + v.clause + ":";
        for (const auto& m : v.witness) w += " " + m;
        rep.add_witness(w + " (" + v.detail + ")");
      }
      rep.add_verdict(f, r.pass(), r.pass() ? "" : "axiom violations: " + std::to_string(r.violations.size()));
      all_pass = all_pass && r.pass();
    }
    rep.set_exit(all_pass ? 0 : 1);
    return;
  }
  if (kind == "additive" || kind == "abelian") {
    auto ring = ring_from_arg(ring_arg);
    rep.add_param("ring", ring->name);
    rep.add_param("cap", std::to_string(cap));
    ModuleFragment frag(ring, cap);
    auto ex = to_explicit_additive(frag);
    if (kind == "additive") {
      auto r = check_additive(ex.additive);
      for (const auto& f : r.failures) rep.add_witness(f);
      for (const auto& w : r.closure_warnings) rep.add_witness("closure: " + w);
      rep.add_verdict("additive", r.pass);
      rep.set_exit(r.pass ? 0 : 1);
    } else {
      auto r = check_abelian(ex.additive);
      for (const auto& f : r.additive.failures) rep.add_witness(f);
      for (const auto& f : r.failures) rep.add_witness(f);
      rep.add_verdict("abelian", r.pass);
      rep.set_exit(r.pass ? 0 : 1);
    }
    return;
  }
  if (kind == "fibration") {
    rep.add_input(total_path);
    rep.add_input(base_path);
    rep.add_input(proj_path);
    auto total = load_category_file(total_path);
    auto base = load_category_file(base_path);
    auto fib = load_fibration_file(proj_path, total, base);
    auto r = is_fibration(fib);
    if (!r.ok && r.failing)
      rep.add_witness("no cartesian lift over " + base->name(r.failing->first) + " into " +
                      total->name(r.failing->second));
    rep.add_verdict("fibration", r.ok);
    rep.set_exit(r.ok ? 0 : 1);
    return;
  }
  throw StructuralError("unknown check kind: " + kind);
}

void report_cone(RunReport& rep, const DiagramTable& d, const LimitResult& r) {
  rep.add_witness("apex " + d.target->name(r.cone.apex));
  for (const auto& [i, leg] : r.cone.legs)
    rep.add_witness("leg at " + d.index->name(i) + ": " + d.target->name(leg));
}

}  // namespace

RunResult run(const std::vector<std::string>& args) {
  CLI::App app{"finite category workbench"};
  app.require_subcommand(0, 1);

  bool json_mode = false;
  long long seed = 20260809;
  int cap = 64;
  long long window = 64;
  app.add_flag("--json", json_mode, "emit the JSON report");
  app.add_option("--seed", seed, "seed recorded for randomized helpers");
  app.add_option("--cap", cap, "size cap for constructed objects");
  app.add_option("--window", window, "component window for the sequence model");

  // check
  auto* check = app.add_subcommand("check", "axiom checks");
  check->fallthrough();
  std::string check_kind = "category", ring_arg = "Z4";
  std::vector<std::string> check_files;
  std::string fib_total, fib_base, fib_proj;
  bool complete = false;
  check->add_option("--kind", check_kind, "category|additive|abelian|fibration");
  check->add_option("files", check_files, "input files");
  check->add_option("--ring", ring_arg, "ring name or table file");
  check->add_option("--total", fib_total, "total category file");
  check->add_option("--base", fib_base, "base category file");
  check->add_option("--proj", fib_proj, "projection file");
  check->add_flag("--complete", complete, "complete unit/associativity triples");

  // limit / colimit
  auto* limit_cmd = app.add_subcommand("limit", "terminal cone of a diagram");
  limit_cmd->fallthrough();
  auto* colimit_cmd = app.add_subcommand("colimit", "initial cocone of a diagram");
  colimit_cmd->fallthrough();
  std::string diagram_path;
  limit_cmd->add_option("--diagram", diagram_path, "diagram file")->required();
  colimit_cmd->add_option("--diagram", diagram_path, "diagram file")->required();

  // adjoint
  auto* adjoint_cmd = app.add_subcommand("adjoint", "search unit/counit for a candidate pair");
  adjoint_cmd->fallthrough();
  std::string cat_c, cat_d, left_fun, right_fun;
  adjoint_cmd->add_option("--cat-c", cat_c)->required();
  adjoint_cmd->add_option("--cat-d", cat_d)->required();
  adjoint_cmd->add_option("--left", left_fun, "functor file C -> D")->required();
  adjoint_cmd->add_option("--right", right_fun, "functor file D -> C")->required();

  // cone
  auto* cone_cmd = app.add_subcommand("cone", "finite subsystem cone");
  cone_cmd->fallthrough();
  std::string cone_cat, cone_sub;
  cone_cmd->add_option("--category", cone_cat)->required();
  cone_cmd->add_option("--subsystem", cone_sub)->required();

  // derive
  auto* derive_cmd = app.add_subcommand("derive", "derived functor of a hom functor");
  derive_cmd->fallthrough();
  std::string derive_ring = "Z4", derive_functor = "id", derive_object;
  int derive_degree = 0;
  derive_cmd->add_option("--ring", derive_ring);
  derive_cmd->add_option("--functor", derive_functor, "\"hom(<obj>,-)\" or id");
  derive_cmd->add_option("--object", derive_object)->required();
  derive_cmd->add_option("--degree", derive_degree);

  // hyper
  auto* hyper_cmd = app.add_subcommand("hyper", "sequence model");
  hyper_cmd->fallthrough();
  auto* hyper_eval = hyper_cmd->add_subcommand("eval", "componentwise verdict");
  hyper_eval->fallthrough();
  std::string hyper_formula;
  std::vector<std::string> hyper_builders, hyper_binds;
  hyper_eval->add_option("--formula", hyper_formula)->required();
  hyper_eval->add_option("--builder", hyper_builders, "builder bound to its canonical slot");
  hyper_eval->add_option("--bind", hyper_binds, "NAME=BUILDER bindings");
  auto* hyper_cone_cmd = hyper_cmd->add_subcommand("cone", "pro-point of a tower");
  hyper_cone_cmd->fallthrough();
  std::string tower_path;
  hyper_cone_cmd->add_option("--tower", tower_path)->required();

  // transfer
  auto* transfer_cmd = app.add_subcommand("transfer", "transfer checks for statements");
  transfer_cmd->fallthrough();
  std::string stmts_path, frag_path, star_path;
  transfer_cmd->add_option("--corpus", stmts_path, "statements file (.phi)")->required();
  transfer_cmd->add_option("--fragment", frag_path, "fragment file (default: sibling fragment.frag)");
  transfer_cmd->add_option("--star", star_path, "star map file (default: identity)");

  // corpus
  auto* corpus_cmd = app.add_subcommand("corpus", "run a statement corpus directory");
  corpus_cmd->fallthrough();
  std::string corpus_dir = "builtin", corpus_star, emit_dir;
  corpus_cmd->add_option("dir", corpus_dir, "corpus directory or 'builtin'");
  corpus_cmd->add_option("--star", corpus_star, "star map file");
  corpus_cmd->add_option("--emit", emit_dir, "write the builtin corpus to a directory");

  // fib
  auto* fib_cmd = app.add_subcommand("fib", "fibration commands");
  fib_cmd->fallthrough();
  auto* fib_check = fib_cmd->add_subcommand("check", "is the projection a fibration");
  fib_check->fallthrough();
  std::string fc_total, fc_base, fc_proj;
  fib_check->add_option("--total", fc_total)->required();
  fib_check->add_option("--base", fc_base)->required();
  fib_check->add_option("--proj", fc_proj)->required();

  std::vector<std::string> argv = args;
  std::vector<const char*> cargv;
  cargv.push_back("catstar");
  for (const auto& a : argv) cargv.push_back(a.c_str());

  RunResult out;
  std::string command = args.empty() ? "help" : args.front();
  RunReport rep(command);
  rep.add_param("seed", std::to_string(seed));

  try {
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help
      out.human = app.help();
      out.json = "{}";
      out.exit_code = 0;
      return out;
    }
    rep.set_error("usage", e.what());
    rep.set_exit(2);
    out.exit_code = 2;
    out.json = rep.to_json();
    out.human = rep.to_human();
    return out;
  }
  rep.raw()["params"]["seed"] = std::to_string(seed);

  try {
    if (check->parsed()) {
      cmd_check(rep, check_kind, check_files, ring_arg, cap, fib_total, fib_base, fib_proj,
                complete);
    } else if (limit_cmd->parsed() || colimit_cmd->parsed()) {
      rep.add_input(diagram_path);
      auto base_dir = std::filesystem::path(diagram_path).parent_path().string();
      auto d = load_diagram(diagram_path, base_dir.empty() ? "." : base_dir);
      auto r = limit_cmd->parsed() ? limit(d) : colimit(d);
      if (r) {
        report_cone(rep, d, *r);
        rep.add_verdict(limit_cmd->parsed() ? "limit" : "colimit", true,
                        d.target->name(r->cone.apex));
        rep.set_exit(0);
      } else {
        rep.add_verdict(limit_cmd->parsed() ? "limit" : "colimit", false, "none");
        rep.set_exit(1);
      }
    } else if (adjoint_cmd->parsed()) {
      rep.add_input(cat_c);
      rep.add_input(cat_d);
      rep.add_input(left_fun);
      rep.add_input(right_fun);
      auto c = load_category_file(cat_c);
      auto d = load_category_file(cat_d);
      auto f = load_functor_file(left_fun, c, d);
      auto g = load_functor_file(right_fun, d, c);
      auto adj = find_adjunction(f, g);
      if (adj) {
        for (std::size_t i = 0; i < adj->unit.size(); ++i)
          rep.add_witness("unit[" + c->name(c->objects()[i]) + "] = " + c->name(adj->unit[i]));
        for (std::size_t i = 0; i < adj->counit.size(); ++i)
          rep.add_witness("counit[" + d->name(d->objects()[i]) + "] = " + d->name(adj->counit[i]));
      }
      rep.add_verdict("adjunction", adj.has_value());
      rep.set_exit(adj ? 0 : 1);
    } else if (cone_cmd->parsed()) {
      rep.add_input(cone_cat);
      rep.add_input(cone_sub);
      auto cat = load_category_file(cone_cat);
      auto sub = load_subsystem_file(cone_sub, *cat);
      auto cone = finite_subsystem_cone(*cat, sub);
      rep.add_witness("apex " + cat->name(cone.apex));
      for (const auto& [o, pj] : cone.projections)
        rep.add_witness("projection " + cat->name(o) + ": " + cat->name(pj));
      rep.add_verdict("cone", true, cat->name(cone.apex));
      rep.set_exit(0);
    } else if (derive_cmd->parsed()) {
      auto ring = ring_from_arg(derive_ring);
      rep.add_param("ring", ring->name);
      rep.add_param("functor", derive_functor);
      rep.add_param("degree", std::to_string(derive_degree));
      ModuleFragment frag(ring, cap);
      ModuleFunctor fun;
      if (derive_functor == "id") {
        fun = identity_module_functor(frag);
      } else if (derive_functor.rfind("hom(", 0) == 0 && derive_functor.back() == ')') {
        auto inner = derive_functor.substr(4, derive_functor.size() - 5);
        auto comma = inner.find(',');
        if (comma == std::string::npos) throw StructuralError("functor syntax: hom(<obj>,-)");
        fun = hom_functor(frag, frag.find_object(inner.substr(0, comma)));
      } else {
        throw StructuralError("unknown functor spec: " + derive_functor);
      }
      int obj = frag.find_object(derive_object);
      int result = derived_functor(frag, fun, obj, derive_degree);
      rep.add_verdict("derived", true, frag.object(result).name);
      rep.set_exit(0);
    } else if (hyper_eval->parsed()) {
      std::map<std::string, InternalInt> binds;
      for (const auto& b : hyper_builders) binds[default_slot(b)] = builder_by_name(b);
      for (const auto& spec : hyper_binds) {
        auto eq = spec.find('=');
        if (eq == std::string::npos) throw StructuralError("--bind needs NAME=BUILDER");
        binds[spec.substr(0, eq)] = builder_by_name(spec.substr(eq + 1));
      }
      if (std::filesystem::exists(hyper_formula)) {
        rep.add_input(hyper_formula);
        std::ifstream ff(hyper_formula);
        std::string line, collected;
        while (std::getline(ff, line)) {
          if (line.empty() || line[0] == '#' || line.rfind("@name", 0) == 0) continue;
          collected = line;
          break;
        }
        if (collected.empty()) throw StructuralError("formula file has no statement");
        hyper_formula = collected;
      }
      rep.add_param("formula", hyper_formula);
      rep.add_param("window", std::to_string(window));
      Verdict v;
      try {
        auto nf = parse_num_formula(hyper_formula);
        v = eval_num_on_window(nf, binds, static_cast<std::size_t>(window));
      } catch (const ParseError&) {
        Fragment empty_frag;
        auto f = parse_formula(hyper_formula, empty_frag);
        std::map<std::string, InternalValue> vbinds;
        for (const auto& [name, seq] : binds) vbinds[name] = as_values(seq);
        v = eval_on_window(f, vbinds, static_cast<std::size_t>(window), empty_frag.config);
      }
      rep.add_witness("true components: " + std::to_string(v.true_count));
      rep.add_witness("false components: " + std::to_string(v.false_count));
      if (v.certified) rep.add_witness("certificate: " + v.certificate);
      rep.add_verdict("verdict", v.kind != VerdictKind::Undecided,
                      to_string(v.kind) + (v.certified ? " certified" : ""));
      rep.set_exit(v.kind == VerdictKind::Undecided ? 1 : 0);
    } else if (hyper_cone_cmd->parsed()) {
      rep.add_input(tower_path);
      auto t = load_module_tower_file(tower_path);
      auto hc = hyper_cone(t);
      std::size_t w = std::min<std::size_t>(static_cast<std::size_t>(window), t.exhaustion.size());
      for (std::size_t n = 0; n < w; ++n)
        rep.add_witness("apex[" + std::to_string(n) + "] = " + hc.apex.gen(n));
      for (const auto& [obj, proj] : hc.projections)
        rep.add_witness("projection " + obj + " defined from " + std::to_string(proj.defined_from));
      rep.add_verdict("hyper-cone", true);
      rep.set_exit(0);
    } else if (transfer_cmd->parsed()) {
      rep.add_input(stmts_path);
      std::string fpath = frag_path;
      if (fpath.empty())
        fpath = (std::filesystem::path(stmts_path).parent_path() / "fragment.frag").string();
      rep.add_input(fpath);
      corpus::Corpus c;
      c.fragment = load_fragment_file(fpath);
      std::ifstream sf(stmts_path);
      if (!sf) throw StructuralError("cannot open statements file: " + stmts_path);
      c.items = corpus::parse_statements(sf);
      StarMap star =
          star_path.empty() ? corpus::identity_star(c) : corpus::load_star_file(star_path, c);
      if (!star_path.empty()) rep.add_input(star_path);
      auto r = corpus::run_corpus(c, star);
      for (const auto& item : r.items)
        rep.add_verdict(item.name, item.agree,
                        std::string(item.lhs ? "true" : "false") + " vs " +
                            (item.rhs ? "true" : "false"));
      rep.set_exit(r.all_agree ? 0 : 1);
    } else if (corpus_cmd->parsed()) {
      corpus::Corpus c =
          corpus_dir == "builtin" ? corpus::default_corpus() : corpus::load_corpus_dir(corpus_dir);
      rep.add_param("corpus", corpus_dir);
      if (!emit_dir.empty()) {
        corpus::write_corpus_dir(c, emit_dir);
        rep.add_verdict("emit", true, emit_dir);
      }
      StarMap star =
          corpus_star.empty() ? corpus::identity_star(c) : corpus::load_star_file(corpus_star, c);
      if (!corpus_star.empty()) rep.add_input(corpus_star);
      auto r = corpus::run_corpus(c, star);
      std::size_t agreed = 0;
      for (const auto& item : r.items) {
        if (!item.agree)
          rep.add_witness("disagree: " + item.name + " (" + (item.lhs ? "true" : "false") +
                          " vs " + (item.rhs ? "true" : "false") + ")");
        agreed += item.agree ? 1 : 0;
      }
      rep.add_verdict("corpus", r.all_agree,
                      std::to_string(agreed) + "/" + std::to_string(r.items.size()) + " agree");
      rep.set_exit(r.all_agree ? 0 : 1);
    } else if (fib_check->parsed()) {
      cmd_check(rep, "fibration", {}, "", cap, fc_total, fc_base, fc_proj, false);
    } else {
      out.human = app.help();
      out.json = "{}";
      out.exit_code = 0;
      return out;
    }
  } catch (const ParseError& e) {
    rep.set_error("parse", e.what());
    rep.set_exit(2);
  } catch (const StructuralError& e) {
    rep.set_error("structural", e.what());
    rep.set_exit(2);
  } catch (const PreconditionError& e) {
    rep.set_error("precondition", e.what());
    rep.set_exit(2);
  } catch (const CapExceededError& e) {
    rep.set_error("cap-exceeded", e.what());
    rep.set_exit(2);
  }

  out.exit_code = rep.exit_code();
  out.json = rep.to_json();
  out.human = json_mode ? out.json : rep.to_human();
  return out;
}

}  // namespace catstar::cli
