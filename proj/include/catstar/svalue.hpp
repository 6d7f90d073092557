#pragma once

#include <optional>
#include <string>
#include <vector>

#include "catstar/errors.hpp"

namespace catstar {

enum class PairEncoding {
  Flat,        // <a,b> = {a, {a,b}}
  Kuratowski,  // <a,b> = {{a}, {a,b}}
};

// An element of a bounded-rank superstructure: either a base atom (not a set)
// or a finite set of values. Sets are canonicalized (sorted, deduplicated) so
// structural equality is value equality.
class SValue {
 public:
  static SValue base(std::string atom);
  static SValue set(std::vector<SValue> elems);
  static SValue empty_set() { return set({}); }

  bool is_base() const { return is_base_; }
  bool is_set() const { return !is_base_; }
  const std::string& atom() const;
  const std::vector<SValue>& elems() const;

  // base elements have rank 0; a set has rank 1 + max over elements
  int rank() const;
  bool contains(const SValue& v) const;

  bool operator==(const SValue& o) const;
  bool operator<(const SValue& o) const;  // base < set; then content order

  std::string str() const;  // canonical braces notation

 private:
  bool is_base_ = true;
  std::string atom_;
  std::vector<SValue> elems_;
};

// <a,b> under the chosen encoding; throws CapExceededError past max_rank.
SValue encode_pair(const SValue& a, const SValue& b, PairEncoding enc, int max_rank);

// If w encodes a pair with first component x, returns the second component.
std::optional<SValue> pair_second(const SValue& w, const SValue& x, PairEncoding enc);

// Parses braces notation over the given base atoms: `{b0, {b0, b1}}`.
// Unknown identifiers are errors.
SValue parse_svalue(const std::string& text, const std::vector<std::string>& base_atoms);

}  // namespace catstar
