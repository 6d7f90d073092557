#include "catstar/svalue.hpp"

#include <algorithm>
#include <sstream>

namespace catstar {

SValue SValue::base(std::string atom) {
  SValue v;
  v.is_base_ = true;
  v.atom_ = std::move(atom);
  return v;
}

SValue SValue::set(std::vector<SValue> elems) {
  SValue v;
  v.is_base_ = false;
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  v.elems_ = std::move(elems);
  return v;
}

const std::string& SValue::atom() const {
  if (!is_base_) throw PreconditionError("atom() on a set");
  return atom_;
}

const std::vector<SValue>& SValue::elems() const {
  if (is_base_) throw PreconditionError("elems() on a base element");
  return elems_;
}

int SValue::rank() const {
  if (is_base_) return 0;
  int r = 0;
  for (const auto& e : elems_) r = std::max(r, e.rank());
  return r + 1;
}

bool SValue::contains(const SValue& v) const {
  if (is_base_) return false;
  return std::binary_search(elems_.begin(), elems_.end(), v);
}

bool SValue::operator==(const SValue& o) const {
  if (is_base_ != o.is_base_) return false;
  return is_base_ ? atom_ == o.atom_ : elems_ == o.elems_;
}

bool SValue::operator<(const SValue& o) const {
  if (is_base_ != o.is_base_) return is_base_;  // base elements sort first
  if (is_base_) return atom_ < o.atom_;
  return elems_ < o.elems_;
}

std::string SValue::str() const {
  if (is_base_) return atom_;
  std::string out = "{";
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (i) out += ", ";
    out += elems_[i].str();
  }
  return out + "}";
}

SValue encode_pair(const SValue& a, const SValue& b, PairEncoding enc, int max_rank) {
  SValue inner = SValue::set({a, b});
  SValue out = enc == PairEncoding::Flat ? SValue::set({a, inner})
                                         : SValue::set({SValue::set({a}), inner});
  if (out.rank() > max_rank)
    throw CapExceededError("pair construction exceeds rank bound " + std::to_string(max_rank));
  return out;
}

std::optional<SValue> pair_second(const SValue& w, const SValue& x, PairEncoding enc) {
  if (!w.is_set()) return std::nullopt;
  if (enc == PairEncoding::Flat) {
    // w = {x, u} with u = {x, y}; u != x always (no membership cycles)
    if (!w.contains(x)) return std::nullopt;
    for (const auto& u : w.elems()) {
      if (!u.is_set() || !u.contains(x) || u.elems().size() > 2) continue;
      if (!(w == SValue::set({x, u}))) continue;
      if (u.elems().size() == 1) return x;  // u = {x}: y = x
      for (const auto& y : u.elems())
        if (!(y == x)) return y;
    }
    return std::nullopt;
  }
  // Kuratowski: w = {{x}, {x,y}}
  SValue sx = SValue::set({x});
  if (!w.contains(sx)) return std::nullopt;
  if (w.elems().size() == 1) return x;  // {{x}} encodes <x,x>
  if (w.elems().size() != 2) return std::nullopt;
  for (const auto& u : w.elems()) {
    if (u == sx) continue;
    if (!u.is_set() || !u.contains(x) || u.elems().size() != 2) return std::nullopt;
    for (const auto& y : u.elems())
      if (!(y == x)) return y;
  }
  return std::nullopt;
}

namespace {

struct SParser {
  const std::string& text;
  const std::vector<std::string>& atoms;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  [[noreturn]] void fail(const std::string& what) { throw ParseError(what, 1, pos + 1); }

  SValue value() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of value");
    if (text[pos] == '{') {
      ++pos;
      std::vector<SValue> elems;
      skip_ws();
      if (pos < text.size() && text[pos] == '}') {
        ++pos;
        return SValue::set({});
      }
      while (true) {
        elems.push_back(value());
        skip_ws();
        if (pos < text.size() && text[pos] == ',') {
          ++pos;
          continue;
        }
        if (pos < text.size() && text[pos] == '}') {
          ++pos;
          return SValue::set(std::move(elems));
        }
        fail("expected ',' or '}'");
      }
    }
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    if (start == pos) fail("expected identifier or '{'");
    std::string name = text.substr(start, pos - start);
    if (name == "emptyset") return SValue::set({});
    if (std::find(atoms.begin(), atoms.end(), name) == atoms.end())
      fail("unknown base atom: " + name);
    return SValue::base(name);
  }
};

}  // namespace

SValue parse_svalue(const std::string& text, const std::vector<std::string>& base_atoms) {
  SParser p{text, base_atoms};
  auto v = p.value();
  p.skip_ws();
  if (p.pos != text.size()) throw ParseError("trailing characters after value", 1, p.pos + 1);
  return v;
}

}  // namespace catstar
