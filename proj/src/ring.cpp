#include "catstar/ring.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <tuple>
#include <sstream>

namespace catstar {

int FiniteRing::neg(int a) const {
  for (int b = 0; b < n; ++b)
    if (plus(a, b) == 0) return b;
  throw StructuralError("no additive inverse for " + std::to_string(a) + " in " + name);
}

std::vector<std::string> FiniteRing::validate() const {
  std::vector<std::string> bad;
  auto sq = [&](const std::vector<std::vector<int>>& t) {
    if (static_cast<int>(t.size()) != n) return false;
    for (const auto& row : t) {
      if (static_cast<int>(row.size()) != n) return false;
      for (int v : row)
        if (v < 0 || v >= n) return false;
    }
    return true;
  };
  if (n <= 0 || !sq(add) || !sq(mul) || one < 0 || one >= n) {
    bad.push_back("tables malformed");
    return bad;
  }
  for (int a = 0; a < n; ++a) {
    if (plus(a, 0) != a) bad.push_back("0 not additive identity");
    if (times(a, one) != a || times(one, a) != a) bad.push_back("1 not multiplicative identity");
    bool has_neg = false;
    for (int b = 0; b < n; ++b)
      if (plus(a, b) == 0) has_neg = true;
    if (!has_neg) bad.push_back("missing additive inverse");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (plus(a, b) != plus(b, a)) bad.push_back("addition not commutative");
      for (int c = 0; c < n; ++c) {
        if (plus(plus(a, b), c) != plus(a, plus(b, c))) bad.push_back("addition not associative");
        if (times(times(a, b), c) != times(a, times(b, c)))
          bad.push_back("multiplication not associative");
        if (times(a, plus(b, c)) != plus(times(a, b), times(a, c)))
          bad.push_back("left distributivity fails");
        if (times(plus(a, b), c) != plus(times(a, c), times(b, c)))
          bad.push_back("right distributivity fails");
      }
    }
  std::sort(bad.begin(), bad.end());
  bad.erase(std::unique(bad.begin(), bad.end()), bad.end());
  return bad;
}

RingPtr ring_cyclic(int m) {
  auto r = std::make_shared<FiniteRing>();
  r->name = "Z" + std::to_string(m);
  r->n = m;
  r->one = m == 1 ? 0 : 1;
  r->add.assign(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m)));
  r->mul = r->add;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      r->add[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % m;
      r->mul[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a * b) % m;
    }
  return r;
}

RingPtr ring_gf4() {
  // elements 0, 1, x, x+1 encoded 0..3; x^2 = x + 1
  auto r = std::make_shared<FiniteRing>();
  r->name = "F4";
  r->n = 4;
  r->one = 1;
  auto xor2 = [](int a, int b) { return a ^ b; };
  r->add.assign(4, std::vector<int>(4));
  r->mul.assign(4, std::vector<int>(4));
  auto gmul = [&](int a, int b) {
    // carriers as F2[x]/(x^2+x+1): bits (b1 b0) = b1*x + b0
    int out = 0;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        if (!((a >> i) & 1) || !((b >> j) & 1)) continue;
        int deg = i + j;
        if (deg <= 1) out ^= 1 << deg;
        else out ^= 0b11;  // x^2 = x + 1
      }
    return out;
  };
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      r->add[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = xor2(a, b);
      r->mul[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = gmul(a, b);
    }
  return r;
}

RingPtr ring_product(const FiniteRing& a, const FiniteRing& b) {
  auto r = std::make_shared<FiniteRing>();
  r->name = a.name + "x" + b.name;
  r->n = a.n * b.n;
  auto code = [&](int x, int y) { return x * b.n + y; };
  r->one = code(a.one, b.one);
  r->add.assign(static_cast<std::size_t>(r->n), std::vector<int>(static_cast<std::size_t>(r->n)));
  r->mul = r->add;
  for (int x1 = 0; x1 < a.n; ++x1)
    for (int y1 = 0; y1 < b.n; ++y1)
      for (int x2 = 0; x2 < a.n; ++x2)
        for (int y2 = 0; y2 < b.n; ++y2) {
          r->add[static_cast<std::size_t>(code(x1, y1))][static_cast<std::size_t>(code(x2, y2))] =
              code(a.plus(x1, x2), b.plus(y1, y2));
          r->mul[static_cast<std::size_t>(code(x1, y1))][static_cast<std::size_t>(code(x2, y2))] =
              code(a.times(x1, x2), b.times(y1, y2));
        }
  return r;
}

RingPtr ring_dual_numbers_f2() {
  // F2[x]/(x^2): elements 0, 1, x, 1+x encoded 0..3 with bit 1 the x part
  auto r = std::make_shared<FiniteRing>();
  r->name = "F2eps";
  r->n = 4;
  r->one = 1;
  r->add.assign(4, std::vector<int>(4));
  r->mul.assign(4, std::vector<int>(4));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      r->add[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = a ^ b;
      int a0 = a & 1, a1 = (a >> 1) & 1, b0 = b & 1, b1 = (b >> 1) & 1;
      int c0 = a0 & b0;
      int c1 = (a0 & b1) ^ (a1 & b0);  // x^2 = 0
      r->mul[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (c1 << 1) | c0;
    }
  return r;
}

RingPtr parse_ring(std::istream& in) {
  auto r = std::make_shared<FiniteRing>();
  std::string line;
  std::size_t lineno = 0;
  enum class Block { None, Add, Mul } block = Block::None;
  std::vector<std::vector<int>>* tgt = nullptr;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "ring") {
      std::string tok;
      ls >> r->name >> tok >> r->n;
      if (tok != "size") throw ParseError("expected 'ring <name> size <n>'", lineno, 1);
      std::string extra;
      if (ls >> extra) {
        if (extra != "one") throw ParseError("expected 'one <k>'", lineno, 1);
        ls >> r->one;
      } else {
        r->one = r->n == 1 ? 0 : 1;
      }
    } else if (head == "add") {
      block = Block::Add;
      tgt = &r->add;
      tgt->clear();
    } else if (head == "mul") {
      block = Block::Mul;
      tgt = &r->mul;
      tgt->clear();
    } else {
      if (block == Block::None) throw ParseError("row outside add/mul block", lineno, 1);
      std::vector<int> row;
      std::istringstream rs(line);
      int v;
      while (rs >> v) row.push_back(v);
      if (static_cast<int>(row.size()) != r->n) throw ParseError("row width mismatch", lineno, 1);
      tgt->push_back(row);
    }
  }
  auto bad = r->validate();
  if (!bad.empty()) throw StructuralError("ring axioms fail: " + bad.front());
  return r;
}

RingPtr load_ring_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StructuralError("cannot open ring file: " + path);
  return parse_ring(in);
}

RingPtr builtin_ring(const std::string& name) {
  if (name == "Z2" || name == "F2") return ring_cyclic(2);
  if (name == "Z3" || name == "F3") return ring_cyclic(3);
  if (name == "Z4") return ring_cyclic(4);
  if (name == "Z6") return ring_cyclic(6);
  if (name == "F4") return ring_gf4();
  if (name == "Z2xZ2") return ring_product(*ring_cyclic(2), *ring_cyclic(2));
  if (name == "F2eps") return ring_dual_numbers_f2();
  throw StructuralError("unknown builtin ring: " + name);
}

std::vector<std::vector<int>> ring_homs(const FiniteRing& a, const FiniteRing& b) {
  std::vector<std::vector<int>> out;
  std::vector<int> img(static_cast<std::size_t>(a.n), -1);
  // images are forced on the additive span of 1; search the rest
  std::function<void(int)> rec = [&](int k) {
    if (k == a.n) {
      out.push_back(img);
      return;
    }
    for (int v = 0; v < b.n; ++v) {
      img[static_cast<std::size_t>(k)] = v;
      bool ok = true;
      if (k == 0 && v != 0) ok = false;
      if (k == a.one && v != b.one) ok = false;
      for (int x = 0; x <= k && ok; ++x)
        for (int y = 0; y <= k && ok; ++y) {
          int s = a.plus(x, y), p = a.times(x, y);
          if (s <= k && b.plus(img[static_cast<std::size_t>(x)], img[static_cast<std::size_t>(y)]) !=
                            img[static_cast<std::size_t>(s)])
            ok = false;
          if (p <= k && b.times(img[static_cast<std::size_t>(x)], img[static_cast<std::size_t>(y)]) !=
                            img[static_cast<std::size_t>(p)])
            ok = false;
        }
      if (ok) rec(k + 1);
    }
    img[static_cast<std::size_t>(k)] = -1;
  };
  rec(0);
  return out;
}

FieldCheck residue_field_check(long long m) {
  if (m <= 1) throw PreconditionError("degenerate ring Z/" + std::to_string(m));
  // unit enumeration: find and verify an inverse for every nonzero element
  auto egcd = [](long long a, long long b) {
    long long x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b) {
      long long q = a / b;
      std::swap(a -= q * b, b);
      std::swap(x0 -= q * x1, x1);
      std::swap(y0 -= q * y1, y1);
    }
    return std::tuple<long long, long long, long long>{a, x0, y0};
  };
  for (long long a = 2; a < m; ++a) {
    auto [g, x, y] = egcd(a, m);
    (void)y;
    if (g != 1) return {false, std::make_pair(a, m / g)};  // a * (m/g) = 0 mod m
    long long inv = ((x % m) + m) % m;
    if ((a * inv) % m != 1) throw StructuralError("inverse verification failed");
  }
  return {true, std::nullopt};
}

}  // namespace catstar
