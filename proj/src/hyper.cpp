#include "catstar/hyper.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "catstar/fixtures.hpp"

namespace catstar {

std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::True: return "True";
    case VerdictKind::False: return "False";
    case VerdictKind::Undecided: return "Undecided";
  }
  return "?";
}

InternalValue star_const(const SValue& v) {
  InternalValue s;
  s.name = "const " + v.str();
  s.gen = [v](std::size_t) { return v; };
  s.certificates = {{"constant", 0}};
  return s;
}

InternalInt star_const_int(long long v, const std::string& name) {
  InternalInt s;
  s.name = name.empty() ? "const " + std::to_string(v) : name;
  s.gen = [v](std::size_t) { return v; };
  s.certificates = {{"constant", 0}};
  return s;
}

InternalInt omega() {
  InternalInt s;
  s.name = "omega";
  s.gen = [](std::size_t n) { return static_cast<long long>(n); };
  s.certificates = {{"monotone-increasing", 0}, {"nonnegative", 0}};
  return s;
}

InternalInt nth_prime() {
  InternalInt s;
  s.name = "nth_prime";
  auto cache = std::make_shared<std::vector<long long>>();
  s.gen = [cache](std::size_t n) {
    auto& primes = *cache;
    while (primes.size() <= n) {
      long long cand = primes.empty() ? 2 : primes.back() + 1;
      while (true) {
        bool ok = true;
        for (long long d = 2; d * d <= cand; ++d)
          if (cand % d == 0) {
            ok = false;
            break;
          }
        if (ok) break;
        ++cand;
      }
      primes.push_back(cand);
    }
    return primes[n];
  };
  s.certificates = {{"prime", 0}, {"monotone-increasing", 0}};
  return s;
}

InternalInt factorial_seq() {
  InternalInt s;
  s.name = "factorial";
  s.gen = [](std::size_t n) {
    long long acc = 1;
    for (std::size_t k = 2; k <= n; ++k) acc *= static_cast<long long>(k);
    return acc;
  };
  // strictly increasing only from index 1 (0! = 1! = 1)
  s.certificates = {{"monotone-increasing", 1}, {"positive", 0}};
  return s;
}

InternalInt custom_int(const std::string& name, std::function<long long(std::size_t)> gen,
                       std::size_t defined_from, std::vector<TailCertificate> certs) {
  InternalInt s;
  s.name = name;
  s.gen = std::move(gen);
  s.defined_from = defined_from;
  s.certificates = std::move(certs);
  return s;
}

InternalValue as_values(const InternalInt& s) {
  InternalValue out;
  out.name = s.name;
  out.defined_from = s.defined_from;
  auto base = s;
  out.gen = [base](std::size_t n) { return SValue::base(std::to_string(base.gen(n))); };
  out.certificates = s.certificates;
  return out;
}

namespace {

bool terms_identical(const TermPtr& a, const TermPtr& b) { return term_equal(a, b); }

// A certified claim asserts the truth value from a known component index on;
// window evidence at or past that index must agree, or the certificate is
// exposed as wrong. Claims whose onset lies beyond the window are vacuously
// consistent.
struct CertClaim {
  bool value;
  std::size_t from;
  std::string rule;
};

Verdict assemble(std::size_t begin, std::size_t end, const std::vector<bool>& truths,
                 const std::optional<CertClaim>& claim) {
  Verdict v;
  v.window_begin = begin;
  v.window_end = end;
  for (std::size_t i = 0; i < truths.size(); ++i) {
    if (truths[i]) {
      ++v.true_count;
      if (!v.first_true) v.first_true = begin + i;
    } else {
      ++v.false_count;
      if (!v.first_false) v.first_false = begin + i;
    }
  }
  if (claim) {
    for (std::size_t n = std::max(claim->from, begin); n < end; ++n)
      if (truths[n - begin] != claim->value)
        throw std::logic_error("certificate '" + claim->rule +
                               "' contradicted by component " + std::to_string(n));
    v.kind = claim->value ? VerdictKind::True : VerdictKind::False;
    v.certified = true;
    v.certificate = claim->rule;
  } else {
    v.kind = VerdictKind::Undecided;
  }
  return v;
}

}  // namespace

Verdict eval_on_window(const FormulaPtr& phi, const std::map<std::string, InternalValue>& binds,
                       std::size_t window, const LogicConfig& cfg) {
  std::size_t begin = 0;
  for (const auto& [name, seq] : binds) begin = std::max(begin, seq.defined_from);
  if (window <= begin)
    throw PreconditionError("window " + std::to_string(window) +
                            " does not reach past definedFrom " + std::to_string(begin));
  for (const auto& v : free_vars(phi))
    if (!binds.count(v)) throw PreconditionError("free variable " + v + " unbound");

  std::vector<bool> truths;
  for (std::size_t n = begin; n < window; ++n) {
    std::map<std::string, SValue> env;
    for (const auto& [name, seq] : binds) env[name] = seq.gen(n);
    truths.push_back(eval_env(phi, env, cfg));
  }

  // certification rules for the formula model
  std::optional<CertClaim> claim;
  bool all_const = true;
  for (const auto& [name, seq] : binds)
    if (!seq.cert_from("constant")) all_const = false;
  if (all_const) {
    claim = CertClaim{truths.empty() ? true : truths.front(), begin, "all bindings constant"};
  } else if (phi->kind == Formula::Kind::Eq && terms_identical(phi->s, phi->t)) {
    claim = CertClaim{true, 0, "reflexive equation"};
  }
  return assemble(begin, window, truths, claim);
}

// ---------------------------------------------------------------------------
// numeric predicates

namespace {

struct NumParser {
  const std::string& text;
  std::size_t pos = 0;

  void ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  [[noreturn]] void fail(const std::string& w) { throw ParseError(w, 1, pos + 1); }

  bool lit(const char* s) {
    ws();
    std::size_t len = std::strlen(s);
    if (text.compare(pos, len, s) == 0) {
      pos += len;
      return true;
    }
    return false;
  }

  std::string ident() {
    ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    if (start == pos) fail("expected identifier");
    return text.substr(start, pos - start);
  }

  NumTerm term() {
    ws();
    if (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '-')) {
      std::size_t start = pos;
      if (text[pos] == '-') ++pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      NumTerm t;
      t.is_const = true;
      t.value = std::stoll(text.substr(start, pos - start));
      return t;
    }
    NumTerm t;
    t.is_const = false;
    t.slot = ident();
    return t;
  }

  NumFormulaPtr pred() {
    ws();
    if (lit("not")) {
      auto f = std::make_shared<NumFormula>();
      f->kind = NumFormula::Kind::Not;
      f->f = pred();
      return f;
    }
    if (lit("(")) {
      auto lhs = pred();
      ws();
      NumFormula::Kind k;
      if (lit("and"))
        k = NumFormula::Kind::And;
      else if (lit("or"))
        k = NumFormula::Kind::Or;
      else
        fail("expected 'and' or 'or'");
      auto rhs = pred();
      ws();
      if (!lit(")")) fail("expected ')'");
      auto f = std::make_shared<NumFormula>();
      f->kind = k;
      f->f = lhs;
      f->g = rhs;
      return f;
    }
    // predicate or comparison
    std::size_t save = pos;
    ws();
    if (std::isalpha(static_cast<unsigned char>(text[pos]))) {
      auto name = ident();
      ws();
      if (pos < text.size() && text[pos] == '(') {
        ++pos;
        auto t = term();
        ws();
        if (!lit(")")) fail("expected ')'");
        auto f = std::make_shared<NumFormula>();
        if (name == "is_prime")
          f->kind = NumFormula::Kind::IsPrime;
        else if (name == "even")
          f->kind = NumFormula::Kind::Even;
        else if (name == "odd")
          f->kind = NumFormula::Kind::Odd;
        else
          fail("unknown predicate " + name);
        f->a = t;
        return f;
      }
      pos = save;
    }
    auto a = term();
    ws();
    std::string op;
    for (const char* cand : {"<=", ">=", "=", "<", ">"})
      if (lit(cand)) {
        op = cand;
        break;
      }
    if (op.empty()) fail("expected comparison");
    auto b = term();
    auto f = std::make_shared<NumFormula>();
    f->kind = NumFormula::Kind::Cmp;
    f->cmp = op;
    f->a = a;
    f->b = b;
    return f;
  }
};

long long term_at(const NumTerm& t, const std::map<std::string, InternalInt>& binds,
                  std::size_t n) {
  if (t.is_const) return t.value;
  auto it = binds.find(t.slot);
  if (it == binds.end()) throw PreconditionError("unbound slot " + t.slot);
  return it->second.at(n);
}

bool is_prime_ll(long long v) {
  if (v < 2) return false;
  for (long long d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

struct NumClaim {
  bool value;
  std::size_t from;  // onset when crisply known; SIZE_MAX means beyond any window
  std::string rule;
};

// certified eventual truth value, when a rule applies
std::optional<NumClaim> certify(const NumFormulaPtr& p,
                                const std::map<std::string, InternalInt>& b) {
  using K = NumFormula::Kind;
  auto slot_cert = [&](const NumTerm& t, const char* prop) -> bool {
    if (t.is_const) return false;
    auto it = b.find(t.slot);
    return it != b.end() && it->second.cert_from(prop).has_value();
  };
  auto constant_like = [&](const NumTerm& t) {
    return t.is_const || slot_cert(t, "constant");
  };
  auto cert_onset = [&](const NumTerm& t, const char* prop) -> std::size_t {
    auto it = b.find(t.slot);
    if (it == b.end()) return 0;
    auto f = it->second.cert_from(prop);
    return f ? *f : 0;
  };
  switch (p->kind) {
    case K::Cmp: {
      if (constant_like(p->a) && constant_like(p->b)) {
        // both eventually constant: decide on any index past definedFrom
        return std::nullopt;  // handled by the all-constant rule upstream
      }
      bool a_const = constant_like(p->a), b_const = constant_like(p->b);
      bool a_mono = !p->a.is_const && slot_cert(p->a, "monotone-increasing");
      bool b_mono = !p->b.is_const && slot_cert(p->b, "monotone-increasing");
      // the escape rules know the claim holds eventually but not from where
      const char* escape = "strictly increasing sequence escapes any constant";
      const std::size_t later = static_cast<std::size_t>(-1);
      if ((p->cmp == "<" || p->cmp == "<=") && a_const && b_mono)
        return NumClaim{true, later, escape};
      if ((p->cmp == ">" || p->cmp == ">=") && a_mono && b_const)
        return NumClaim{true, later, escape};
      if ((p->cmp == "<" || p->cmp == "<=") && a_mono && b_const)
        return NumClaim{false, later, escape};
      if ((p->cmp == ">" || p->cmp == ">=") && a_const && b_mono)
        return NumClaim{false, later, escape};
      if (p->cmp == "=" && !p->a.is_const && !p->b.is_const && p->a.slot == p->b.slot)
        return NumClaim{true, 0, "reflexive comparison"};
      if (p->cmp == "=" && ((a_const && b_mono) || (a_mono && b_const)))
        return NumClaim{false, later, escape};
      return std::nullopt;
    }
    case K::IsPrime:
      if (!p->a.is_const && slot_cert(p->a, "prime"))
        return NumClaim{true, cert_onset(p->a, "prime"), "primality certificate"};
      return std::nullopt;
    case K::Even:
    case K::Odd: {
      bool odd_truth = p->kind == K::Odd;
      if (!p->a.is_const && slot_cert(p->a, "prime") && slot_cert(p->a, "monotone-increasing"))
        return NumClaim{odd_truth, static_cast<std::size_t>(-1),
                        "increasing primes are eventually odd"};
      if (!p->a.is_const && slot_cert(p->a, "even-composite"))
        return NumClaim{!odd_truth, cert_onset(p->a, "even-composite"),
                        "builder certificate: components even"};
      return std::nullopt;
    }
    case K::Not: {
      auto inner = certify(p->f, b);
      if (!inner) return std::nullopt;
      return NumClaim{!inner->value, inner->from, inner->rule};
    }
    case K::And: {
      auto l = certify(p->f, b), r = certify(p->g, b);
      if (l && !l->value) return l;
      if (r && !r->value) return r;
      if (l && r)
        return NumClaim{l->value && r->value, std::max(l->from, r->from),
                        l->rule + "; " + r->rule};
      return std::nullopt;
    }
    case K::Or: {
      auto l = certify(p->f, b), r = certify(p->g, b);
      if (l && l->value) return l;
      if (r && r->value) return r;
      if (l && r)
        return NumClaim{l->value || r->value, std::max(l->from, r->from),
                        l->rule + "; " + r->rule};
      return std::nullopt;
    }
  }
  return std::nullopt;
}

void collect_slots(const NumFormulaPtr& p, std::set<std::string>& out) {
  using K = NumFormula::Kind;
  switch (p->kind) {
    case K::Cmp:
      if (!p->a.is_const) out.insert(p->a.slot);
      if (!p->b.is_const) out.insert(p->b.slot);
      break;
    case K::IsPrime:
    case K::Even:
    case K::Odd:
      if (!p->a.is_const) out.insert(p->a.slot);
      break;
    case K::Not: collect_slots(p->f, out); break;
    default:
      collect_slots(p->f, out);
      collect_slots(p->g, out);
  }
}

}  // namespace

NumFormulaPtr parse_num_formula(const std::string& text) {
  NumParser p{text};
  auto f = p.pred();
  p.ws();
  if (p.pos != text.size()) throw ParseError("trailing input", 1, p.pos + 1);
  return f;
}

bool eval_num_at(const NumFormulaPtr& p, const std::map<std::string, InternalInt>& binds,
                 std::size_t n) {
  using K = NumFormula::Kind;
  switch (p->kind) {
    case K::Cmp: {
      long long a = term_at(p->a, binds, n), b = term_at(p->b, binds, n);
      if (p->cmp == "=") return a == b;
      if (p->cmp == "<") return a < b;
      if (p->cmp == "<=") return a <= b;
      if (p->cmp == ">") return a > b;
      return a >= b;
    }
    case K::IsPrime: return is_prime_ll(term_at(p->a, binds, n));
    case K::Even: return term_at(p->a, binds, n) % 2 == 0;
    case K::Odd: return term_at(p->a, binds, n) % 2 != 0;
    case K::Not: return !eval_num_at(p->f, binds, n);
    case K::And: return eval_num_at(p->f, binds, n) && eval_num_at(p->g, binds, n);
    case K::Or: return eval_num_at(p->f, binds, n) || eval_num_at(p->g, binds, n);
  }
  throw StructuralError("unreachable");
}

Verdict eval_num_on_window(const NumFormulaPtr& p, const std::map<std::string, InternalInt>& binds,
                           std::size_t window) {
  std::set<std::string> slots;
  collect_slots(p, slots);
  std::size_t begin = 0;
  for (const auto& s : slots) {
    auto it = binds.find(s);
    if (it == binds.end()) throw PreconditionError("unbound slot " + s);
    begin = std::max(begin, it->second.defined_from);
  }
  if (window <= begin)
    throw PreconditionError("window " + std::to_string(window) +
                            " does not reach past definedFrom " + std::to_string(begin));

  std::vector<bool> truths;
  for (std::size_t n = begin; n < window; ++n) truths.push_back(eval_num_at(p, binds, n));

  std::optional<CertClaim> claim;
  bool all_const = true;
  for (const auto& s : slots)
    if (!binds.at(s).cert_from("constant")) all_const = false;
  if (all_const) {
    claim = CertClaim{truths.front(), begin, "all bindings constant"};
  } else if (auto c = certify(p, binds)) {
    claim = CertClaim{c->value, c->from, c->rule};
  }
  return assemble(begin, window, truths, claim);
}

// ---------------------------------------------------------------------------
// residue towers

ResidueComponent ResidueTower::component(std::size_t n) const {
  long long m = moduli.at(n);
  if (m <= 1) throw PreconditionError("degenerate ring Z/" + std::to_string(m) + " at index " +
                                      std::to_string(n));
  auto chk = residue_field_check(m);
  return {m, chk.is_field, chk.zero_divisor};
}

Verdict ResidueTower::field_verdict(std::size_t window) const {
  std::size_t begin = moduli.defined_from;
  if (window <= begin) throw PreconditionError("window does not reach past definedFrom");
  std::vector<bool> truths;
  for (std::size_t n = begin; n < window; ++n) truths.push_back(component(n).is_field);

  std::optional<CertClaim> claim;
  if (auto from = moduli.cert_from("prime")) {
    claim = CertClaim{true, *from, "prime moduli yield fields"};
  } else if (moduli.cert_from("constant")) {
    claim = CertClaim{truths.front(), begin, "constant modulus"};
  } else if (auto from = moduli.cert_from("composite")) {
    claim = CertClaim{false, *from, "composite moduli have zero divisors"};
  }
  // assemble() exposes certificates that the window evidence contradicts
  return assemble(begin, window, truths, claim);
}

ResidueTower residue_tower(const InternalInt& p) {
  return ResidueTower{p};
}

// ---------------------------------------------------------------------------
// explicit towers

void ModuleTower::validate() const {
  if (!index) throw PreconditionError("tower has no index category");
  auto chk = is_filtered(*index, Direction::Cofiltered);
  if (!chk.ok) throw PreconditionError("tower index is not cofiltered (" + chk.reason + ")");
  for (Mor o : index->objects())
    if (!values.count(o)) throw PreconditionError("missing stage value at " + index->name(o));
  for (Mor f = 0; f < static_cast<Mor>(index->size()); ++f) {
    auto it = links.find(f);
    if (it == links.end()) throw PreconditionError("missing link for " + index->name(f));
    const auto& a = values.at(index->src(f));
    const auto& b = values.at(index->tgt(f));
    if (static_cast<int>(it->second.size()) != a.size())
      throw PreconditionError("link table width mismatch at " + index->name(f));
    for (int x = 0; x < a.size(); ++x)
      for (int y = 0; y < a.size(); ++y)
        if (it->second[static_cast<std::size_t>(a.add(x, y))] !=
            b.add(it->second[static_cast<std::size_t>(x)], it->second[static_cast<std::size_t>(y)]))
          throw PreconditionError("link not additive at " + index->name(f));
  }
  for (Mor o : index->objects())
    for (int x = 0; x < values.at(o).size(); ++x)
      if (links.at(o)[static_cast<std::size_t>(x)] != x)
        throw PreconditionError("identity link is not the identity at " + index->name(o));
  for (const auto& tr : index->triples()) {
    const auto& f = links.at(tr[0]);
    const auto& g = links.at(tr[1]);
    const auto& h = links.at(tr[2]);
    for (std::size_t x = 0; x < g.size(); ++x)
      if (h[x] != f[static_cast<std::size_t>(g[x])])
        throw PreconditionError("links not functorial at triple of " + index->name(tr[2]));
  }
  if (exhaustion.empty()) throw PreconditionError("tower needs a nonempty exhaustion");
  for (std::size_t k = 0; k + 1 < exhaustion.size(); ++k) {
    std::set<Mor> a(exhaustion[k].objects.begin(), exhaustion[k].objects.end());
    std::set<Mor> am(exhaustion[k].morphisms.begin(), exhaustion[k].morphisms.end());
    for (Mor o : exhaustion[k + 1].objects) a.erase(o);
    for (Mor m : exhaustion[k + 1].morphisms) am.erase(m);
    if (!a.empty() || !am.empty())
      throw PreconditionError("exhaustion is not monotone at stage " + std::to_string(k));
  }
  for (const auto& j : exhaustion) j.validate(*index);
  std::set<Mor> last_o(exhaustion.back().objects.begin(), exhaustion.back().objects.end());
  std::set<Mor> last_m(exhaustion.back().morphisms.begin(), exhaustion.back().morphisms.end());
  for (Mor o : index->objects())
    if (!last_o.count(o)) throw PreconditionError("exhaustion never covers " + index->name(o));
  for (Mor f = 0; f < static_cast<Mor>(index->size()); ++f)
    if (!index->is_object(f) && !last_m.count(f))
      throw PreconditionError("exhaustion never covers " + index->name(f));
}

ModuleTower power_tower(int p, int depth) {
  ModuleTower t;
  t.index = fixtures::chain_projections(depth);
  long long modulus = 1;
  for (int i = 0; i < depth; ++i) modulus *= p;
  auto ring = ring_cyclic(static_cast<int>(modulus));
  std::map<std::string, int> stage_mod;
  long long m = p;
  for (int k = 0; k < depth; ++k) {
    t.values[t.index->at("n" + std::to_string(k))] =
        cyclic_module(ring, static_cast<int>(m), "Z" + std::to_string(m));
    stage_mod["n" + std::to_string(k)] = static_cast<int>(m);
    m *= p;
  }
  for (Mor f = 0; f < static_cast<Mor>(t.index->size()); ++f) {
    const auto& a = t.values.at(t.index->src(f));
    const auto& b = t.values.at(t.index->tgt(f));
    std::vector<int> table(static_cast<std::size_t>(a.size()));
    for (int x = 0; x < a.size(); ++x) table[static_cast<std::size_t>(x)] = x % b.size();
    t.links[f] = table;
  }
  for (int k = 0; k < depth; ++k) {
    FiniteSubsystem j;
    for (int i = 0; i <= k; ++i) j.objects.push_back(t.index->at("n" + std::to_string(i)));
    for (Mor f = 0; f < static_cast<Mor>(t.index->size()); ++f) {
      if (t.index->is_object(f)) continue;
      bool inside = std::count(j.objects.begin(), j.objects.end(), t.index->src(f)) &&
                    std::count(j.objects.begin(), j.objects.end(), t.index->tgt(f));
      if (inside) j.morphisms.push_back(f);
    }
    t.exhaustion.push_back(j);
  }
  t.validate();
  return t;
}

HyperCone hyper_cone(CatPtr index, const std::vector<FiniteSubsystem>& exhaustion) {
  if (exhaustion.empty()) throw PreconditionError("empty exhaustion");
  auto chk = is_filtered(*index, Direction::Cofiltered);
  if (!chk.ok) throw PreconditionError("hyper cone needs a cofiltered index (" + chk.reason + ")");

  // materialize every stage cone once (exhaustions are small)
  auto cones = std::make_shared<std::vector<ConeOverSubsystem>>();
  for (const auto& j : exhaustion) cones->push_back(finite_subsystem_cone(*index, j));

  HyperCone out;
  CatPtr idx = index;
  out.apex.name = "i_pro";
  out.apex.gen = [cones, idx](std::size_t n) {
    const auto& c = (*cones)[std::min(n, cones->size() - 1)];
    return idx->name(c.apex);
  };
  for (Mor o : index->objects()) {
    std::size_t first = exhaustion.size();
    for (std::size_t k = 0; k < exhaustion.size(); ++k)
      if (std::count(exhaustion[k].objects.begin(), exhaustion[k].objects.end(), o)) {
        first = k;
        break;
      }
    if (first == exhaustion.size()) continue;  // never covered: no projection
    Sequence<std::string> proj;
    proj.name = "p_" + index->name(o);
    proj.defined_from = first;
    Mor obj = o;
    proj.gen = [cones, idx, obj](std::size_t n) {
      const auto& c = (*cones)[std::min(n, cones->size() - 1)];
      return idx->name(c.projections.at(obj));
    };
    out.projections[index->name(o)] = proj;
  }
  return out;
}

HyperCone hyper_cone(const ModuleTower& t) {
  t.validate();
  return hyper_cone(t.index, t.exhaustion);
}

namespace {

std::string table_key(const std::vector<int>& t) {
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(t[i]);
  }
  return out;
}

template <class Value, class HomsFn>
CorrespondenceReport correspondence_impl(const Value& x, CatPtr index,
                                         const std::vector<FiniteSubsystem>& exhaustion,
                                         const std::map<Mor, Value>& values,
                                         const std::map<Mor, std::vector<int>>& links,
                                         const HomsFn& homs_into, std::size_t window) {
  if (window == 0) throw PreconditionError("window must be positive");
  CorrespondenceReport rep;

  // compatible families of i |-> hom(X, G i) along postcomposition
  SetDiagram sd;
  sd.index = index;
  std::map<Mor, std::vector<std::vector<int>>> hom_tables;
  for (Mor i : index->objects()) {
    hom_tables[i] = homs_into(x, values.at(i));
    auto& vals = sd.values[i];
    for (const auto& t : hom_tables[i]) vals.push_back(table_key(t));
  }
  for (Mor f = 0; f < static_cast<Mor>(index->size()); ++f) {
    auto& act = sd.action[f];
    const auto& link = links.at(f);
    for (const auto& t : hom_tables[index->src(f)]) {
      std::vector<int> post(t.size());
      for (std::size_t v = 0; v < t.size(); ++v) post[v] = link[static_cast<std::size_t>(t[v])];
      act[table_key(t)] = table_key(post);
    }
  }
  auto families = compatible_families(sd);

  auto cones = std::vector<ConeOverSubsystem>();
  for (const auto& j : exhaustion) cones.push_back(finite_subsystem_cone(*index, j));
  std::size_t last = std::min(window, exhaustion.size()) - 1;

  // Materialized towers truncate an infinite diagram, and the truncation's
  // top stage is unconstrained from above. The stable comparison therefore
  // runs over the objects of the stage below the deepest window stage: those
  // are the objects every later window stage constrains.
  std::size_t compare_stage = last > 0 ? last - 1 : 0;
  std::vector<Mor> compare = exhaustion[compare_stage].objects;
  std::sort(compare.begin(), compare.end());
  rep.covered_objects = compare.size();

  // trace of a hom through the stage-k cone, restricted to compare objects
  auto traces_at = [&](std::size_t k) {
    std::set<std::vector<std::string>> out;
    const auto& j = exhaustion[k];
    const auto& cone = cones[k];
    std::set<Mor> in_stage(j.objects.begin(), j.objects.end());
    for (const auto& phi : homs_into(x, values.at(cone.apex))) {
      std::vector<std::string> trace;
      for (Mor o : compare) {
        if (!in_stage.count(o)) {
          trace.push_back("?");  // not yet covered at this stage
          continue;
        }
        const auto& link = links.at(cone.projections.at(o));
        std::vector<int> post(phi.size());
        for (std::size_t v = 0; v < phi.size(); ++v)
          post[v] = link[static_cast<std::size_t>(phi[v])];
        trace.push_back(table_key(post));
      }
      out.insert(trace);
    }
    return out;
  };

  auto matches = [&](const std::vector<std::string>& partial, const std::vector<std::string>& t) {
    for (std::size_t i = 0; i < t.size(); ++i)
      if (partial[i] != "?" && partial[i] != t[i]) return false;
    return true;
  };

  // class tuples: realized at every window stage
  std::set<std::vector<std::string>> class_tuples;
  auto last_traces = traces_at(last);
  for (const auto& t : last_traces) {
    if (std::count(t.begin(), t.end(), "?")) continue;
    bool realized_everywhere = true;
    for (std::size_t k = 0; k <= last && realized_everywhere; ++k) {
      bool found = false;
      for (const auto& cand : traces_at(k))
        if (matches(cand, t)) found = true;
      if (!found) realized_everywhere = false;
    }
    if (realized_everywhere) class_tuples.insert(t);
  }
  rep.classes = class_tuples.size();

  // families compared through their restriction to the same objects
  std::set<std::vector<std::string>> family_tuples;
  for (const auto& fam : families) {
    std::vector<std::string> t;
    for (Mor o : compare) t.push_back(fam.at(o));
    family_tuples.insert(t);
  }
  rep.families = family_tuples.size();
  rep.bijective = family_tuples == class_tuples;
  return rep;
}

}  // namespace

CorrespondenceReport limit_correspondence(const Module& x, const ModuleTower& t,
                                          std::size_t window) {
  t.validate();
  auto homs = [](const Module& a, const Module& b) { return module_homs(a, b); };
  return correspondence_impl<Module>(x, t.index, t.exhaustion, t.values, t.links, homs, window);
}

CorrespondenceReport limit_correspondence_rings(const FiniteRing& x, const RingTower& t,
                                                std::size_t window) {
  auto homs = [](const FiniteRing& a, const FiniteRing& b) { return ring_homs(a, b); };
  return correspondence_impl<FiniteRing>(x, t.index, t.exhaustion, t.values, t.links, homs, window);
}

ModuleTower load_module_tower_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StructuralError("cannot open tower file: " + path);
  struct Link {
    int from, to;
    std::string kind;
    int k = 0;
  };
  std::map<int, int> stages;  // stage index -> modulus
  std::vector<Link> link_specs;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "stage") {
      int n;
      std::string eq, lit;
      if (!(ls >> n >> eq >> lit) || eq != "=" || lit.rfind("Z/", 0) != 0)
        throw ParseError("expected 'stage <n> = Z/<m>'", lineno, 1);
      stages[n] = std::stoi(lit.substr(2));
    } else if (head == "link") {
      Link l;
      std::string arrow, colon, kind;
      if (!(ls >> l.from >> arrow >> l.to >> colon >> kind) || arrow != "->" || colon != ":")
        throw ParseError("expected 'link <a> -> <b> : mod|mul <k>'", lineno, 1);
      l.kind = kind;
      if (kind == "mul" && !(ls >> l.k)) throw ParseError("mul needs a factor", lineno, 1);
      if (kind != "mod" && kind != "mul") throw ParseError("unknown link kind " + kind, lineno, 1);
      link_specs.push_back(l);
    } else {
      throw ParseError("unknown tower declaration " + head, lineno, 1);
    }
  }
  if (stages.empty()) throw StructuralError("tower has no stages");

  ModuleTower t;
  int depth = static_cast<int>(stages.size());
  t.index = fixtures::chain_projections(depth);
  // ring big enough to kill every stage: lcm of the moduli
  long long l = 1;
  for (auto& [n, m] : stages) {
    long long g = std::gcd(l, static_cast<long long>(m));
    l = l / g * m;
  }
  auto ring = ring_cyclic(static_cast<int>(l));
  std::vector<int> order;
  for (auto& [n, m] : stages) order.push_back(n);
  std::sort(order.begin(), order.end());
  std::map<int, Mor> stage_obj;
  for (std::size_t k = 0; k < order.size(); ++k) {
    Mor o = t.index->at("n" + std::to_string(k));
    stage_obj[order[k]] = o;
    t.values[o] = cyclic_module(ring, stages[order[k]], "Z" + std::to_string(stages[order[k]]));
  }
  // identity links
  for (Mor o : t.index->objects()) {
    std::vector<int> id(static_cast<std::size_t>(t.values.at(o).size()));
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
    t.links[o] = id;
  }
  auto set_link = [&](Mor f, const Link& spec) {
    const auto& a = t.values.at(t.index->src(f));
    std::vector<int> table(static_cast<std::size_t>(a.size()));
    int m2 = t.values.at(t.index->tgt(f)).size();
    for (int x = 0; x < a.size(); ++x)
      table[static_cast<std::size_t>(x)] =
          spec.kind == "mod" ? x % m2 : static_cast<int>((static_cast<long long>(x) * spec.k) % m2);
    t.links[f] = table;
  };
  for (const auto& spec : link_specs) {
    auto fo = stage_obj.find(spec.from);
    auto to = stage_obj.find(spec.to);
    if (fo == stage_obj.end() || to == stage_obj.end())
      throw StructuralError("link references unknown stage");
    auto homs = t.index->hom(fo->second, to->second);
    if (homs.empty()) throw StructuralError("no chain arrow matching link");
    set_link(homs.front(), spec);
  }
  // fill any remaining non-identity links by composing chain steps (mod)
  for (Mor f = 0; f < static_cast<Mor>(t.index->size()); ++f)
    if (!t.links.count(f)) {
      Link l{0, 0, "mod", 0};
      set_link(f, l);
    }
  // exhaustion stage by stage
  for (int k = 0; k < depth; ++k) {
    FiniteSubsystem j;
    for (int i = 0; i <= k; ++i) j.objects.push_back(t.index->at("n" + std::to_string(i)));
    for (Mor f = 0; f < static_cast<Mor>(t.index->size()); ++f) {
      if (t.index->is_object(f)) continue;
      bool inside = std::count(j.objects.begin(), j.objects.end(), t.index->src(f)) &&
                    std::count(j.objects.begin(), j.objects.end(), t.index->tgt(f));
      if (inside) j.morphisms.push_back(f);
    }
    t.exhaustion.push_back(j);
  }
  t.validate();
  return t;
}

}  // namespace catstar
