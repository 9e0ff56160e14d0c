#include "invgen/perm.hpp"

#include <algorithm>
#include <numeric>

#include "invgen/errors.hpp"

namespace invgen {

uint64_t gcd_u64(uint64_t a, uint64_t b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

uint64_t lcm_u64(uint64_t a, uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd_u64(a, b) * b;
}

Permutation::Permutation(uint32_t degree) : img_(degree) {
  std::iota(img_.begin(), img_.end(), 0u);
}

Permutation::Permutation(std::vector<uint32_t> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (uint32_t v : img_) {
    if (v >= img_.size() || seen[v])
      throw Error(ErrorKind::InvalidPermutation, "image sequence is not a bijection");
    seen[v] = true;
  }
}

bool Permutation::is_identity() const {
  for (uint32_t i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Permutation Permutation::operator*(const Permutation &rhs) const {
  std::vector<uint32_t> out(img_.size());
  for (uint32_t i = 0; i < degree(); ++i) out[i] = rhs.img_[img_[i]];
  Permutation p;
  p.img_ = std::move(out);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<uint32_t> out(img_.size());
  for (uint32_t i = 0; i < degree(); ++i) out[img_[i]] = i;
  Permutation p;
  p.img_ = std::move(out);
  return p;
}

Permutation Permutation::conjugate_by(const Permutation &g) const {
  return g.inverse() * (*this) * g;
}

uint64_t Permutation::order() const {
  uint64_t ord = 1;
  std::vector<bool> seen(img_.size(), false);
  for (uint32_t i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    uint64_t len = 0;
    uint32_t j = i;
    do {
      seen[j] = true;
      j = img_[j];
      ++len;
    } while (j != i);
    ord = lcm_u64(ord, len);
  }
  return ord;
}

Permutation Permutation::extended(uint32_t degree) const {
  std::vector<uint32_t> out(degree);
  std::iota(out.begin(), out.end(), 0u);
  for (uint32_t i = 0; i < this->degree(); ++i) out[i] = img_[i];
  Permutation p;
  p.img_ = std::move(out);
  return p;
}

Permutation Permutation::shifted(uint32_t offset, uint32_t degree) const {
  std::vector<uint32_t> out(degree);
  std::iota(out.begin(), out.end(), 0u);
  for (uint32_t i = 0; i < this->degree(); ++i) out[offset + i] = offset + img_[i];
  Permutation p;
  p.img_ = std::move(out);
  return p;
}

std::vector<std::vector<uint32_t>> Permutation::cycles() const {
  std::vector<std::vector<uint32_t>> cys;
  std::vector<bool> seen(img_.size(), false);
  for (uint32_t i = 0; i < degree(); ++i) {
    if (seen[i] || img_[i] == i) {
      seen[i] = true;
      continue;
    }
    std::vector<uint32_t> cy;
    uint32_t j = i;
    do {
      seen[j] = true;
      cy.push_back(j);
      j = img_[j];
    } while (j != i);
    cys.push_back(std::move(cy));
  }
  return cys;
}

std::string Permutation::str() const {
  auto cys = cycles();
  if (cys.empty()) return "()";
  std::string s;
  for (const auto &cy : cys) {
    s += '(';
    for (std::size_t k = 0; k < cy.size(); ++k) {
      if (k) s += ',';
      s += std::to_string(cy[k] + 1);
    }
    s += ')';
  }
  return s;
}

Permutation Permutation::parse(const std::string &s, uint32_t min_degree) {
  std::vector<std::vector<uint32_t>> cys;
  uint32_t max_pt = 0;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  };
  skip_ws();
  while (i < s.size()) {
    if (s[i] != '(')
      throw Error(ErrorKind::ParseError,
                  "expected '(' at offset " + std::to_string(i) + " in \"" + s + "\"");
    ++i;
    std::vector<uint32_t> cy;
    skip_ws();
    while (i < s.size() && s[i] != ')') {
      std::size_t start = i;
      while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
      if (i == start)
        throw Error(ErrorKind::ParseError,
                    "expected point at offset " + std::to_string(i) + " in \"" + s + "\"");
      unsigned long v = std::stoul(s.substr(start, i - start));
      if (v == 0)
        throw Error(ErrorKind::ParseError, "points are 1-based in \"" + s + "\"");
      cy.push_back(uint32_t(v - 1));
      max_pt = std::max(max_pt, uint32_t(v));
      skip_ws();
      if (i < s.size() && s[i] == ',') {
        ++i;
        skip_ws();
      }
    }
    if (i >= s.size())
      throw Error(ErrorKind::ParseError, "unterminated cycle in \"" + s + "\"");
    ++i; // ')'
    if (cy.size() > 1) cys.push_back(std::move(cy));
    skip_ws();
  }
  uint32_t deg = std::max({max_pt, min_degree, 1u});
  std::vector<uint32_t> img(deg);
  std::iota(img.begin(), img.end(), 0u);
  for (const auto &cy : cys)
    for (std::size_t k = 0; k < cy.size(); ++k) {
      uint32_t from = cy[k], to = cy[(k + 1) % cy.size()];
      if (img[from] != from)
        throw Error(ErrorKind::InvalidPermutation, "point repeated across cycles in \"" + s + "\"");
      img[from] = to;
    }
  return Permutation(std::move(img));
}

} // namespace invgen
