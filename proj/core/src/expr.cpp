#include "invgen/expr.hpp"

#include "invgen/builders.hpp"
#include "invgen/errors.hpp"

namespace invgen {

namespace {

struct Parser {
  const std::string &src;
  std::size_t pos = 0;
  uint64_t order_cap;

  [[noreturn]] void fail(const std::string &expected) const {
    throw Error(ErrorKind::ParseError, "at offset " + std::to_string(pos) + ": expected " +
                                           expected + " in \"" + src + "\"");
  }

  void ws() {
    while (pos < src.size() && (src[pos] == ' ' || src[pos] == '\t')) ++pos;
  }

  bool eat(char c) {
    ws();
    if (pos < src.size() && src[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("'") + c + "'");
  }

  uint64_t integer() {
    ws();
    std::size_t start = pos;
    while (pos < src.size() && src[pos] >= '0' && src[pos] <= '9') ++pos;
    if (pos == start) fail("an integer");
    return std::stoull(src.substr(start, pos - start));
  }

  bool peek_word(const std::string &w) {
    ws();
    return src.compare(pos, w.size(), w) == 0;
  }

  StructuredGroupPtr expr() {
    ws();
    if (pos >= src.size()) fail("a group expression");
    std::size_t anchor = pos;
    auto leaf = [&](PermGroupPtr g) {
      return StructuredGroup::make_leaf(std::move(g), src.substr(anchor, pos - anchor));
    };
    if (peek_word("sdc(")) {
      pos += 4;
      uint64_t n = integer();
      expect(',');
      uint64_t m = integer();
      expect(',');
      uint64_t k = integer();
      expect(')');
      return leaf(sdc_group(uint32_t(n), uint32_t(m), uint32_t(k)));
    }
    if (peek_word("wr(")) {
      pos += 3;
      uint64_t q = integer();
      expect(',');
      uint64_t m = integer();
      expect(',');
      auto g = expr();
      expect(')');
      return wreath_regular(q, uint32_t(m), g, src.substr(anchor, pos - anchor), order_cap);
    }
    if (peek_word("geq(")) {
      pos += 4;
      uint64_t d = integer();
      expect(')');
      return prop_geq_group(uint32_t(d));
    }
    if (peek_word("tower(")) {
      pos += 6;
      uint64_t d = integer();
      expect(',');
      uint64_t p = integer();
      expect(',');
      uint64_t l = integer();
      expect(')');
      return tower_group(uint32_t(d), p, uint32_t(l), order_cap);
    }
    if (peek_word("x(")) {
      pos += 2;
      std::vector<StructuredGroupPtr> parts;
      parts.push_back(expr());
      while (eat(',')) parts.push_back(expr());
      expect(')');
      return StructuredGroup::direct_product(parts, src.substr(anchor, pos - anchor),
                                             order_cap);
    }
    if (peek_word("perm[")) {
      pos += 5;
      std::size_t close = src.find(']', pos);
      if (close == std::string::npos) fail("']'");
      std::string body = src.substr(pos, close - pos);
      pos = close + 1;
      std::vector<std::string> parts;
      std::size_t start = 0;
      for (;;) {
        std::size_t semi = body.find(';', start);
        parts.push_back(body.substr(start, semi == std::string::npos ? semi : semi - start));
        if (semi == std::string::npos) break;
        start = semi + 1;
      }
      uint32_t deg = 0;
      std::vector<Permutation> gens;
      for (const auto &p : parts) deg = std::max(deg, Permutation::parse(p).degree());
      for (const auto &p : parts) gens.push_back(Permutation::parse(p, deg));
      return leaf(PermGroup::from_generators(gens, order_cap));
    }
    char c = src[pos];
    if (c == 'C' || c == 'S' || c == 'A' || c == 'D') {
      ++pos;
      uint64_t n = integer();
      switch (c) {
      case 'C': return leaf(cyclic_group(uint32_t(n)));
      case 'S': return leaf(symmetric_group(uint32_t(n), order_cap));
      case 'A': return leaf(alternating_group(uint32_t(n), order_cap));
      default: return leaf(dihedral_group(uint32_t(n)));
      }
    }
    fail("one of C/S/A/D, sdc(, x(, wr(, geq(, tower(, perm[");
  }
};

} // namespace

StructuredGroupPtr parse_group_expr(const std::string &src, uint64_t order_cap) {
  Parser p{src, 0, order_cap};
  auto g = p.expr();
  p.ws();
  if (p.pos != src.size()) p.fail("end of input");
  return g;
}

} // namespace invgen
