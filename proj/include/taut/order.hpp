#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace taut {

using Exps = std::vector<int32_t>;

inline int64_t total_degree(const Exps& e) {
  int64_t d = 0;
  for (auto x : e) d += x;
  return d;
}

inline bool divides(const Exps& a, const Exps& b) {  // a | b componentwise
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Exps exps_lcm(const Exps& a, const Exps& b) {
  Exps c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = std::max(a[i], b[i]);
  return c;
}

inline Exps exps_add(const Exps& a, const Exps& b) {
  Exps c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

inline Exps exps_sub(const Exps& a, const Exps& b) {
  Exps c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

// Monomial order on exponent vectors. Weyl elements use the same orders on
// the concatenated (x-exponents, d-exponents) vector.
//
//  - degrevlex: total degree, ties by smallest last nonzero difference
//  - deglex:    total degree, ties lexicographically
//  - lex:       lexicographic
//  - weighted:  weight vector first, ties by degrevlex
//  - block(s):  degrevlex on the first s variables, then degrevlex on the
//               rest; eliminates the first block
struct TermOrder {
  enum class Kind { DegRevLex, DegLex, Lex, Weighted, Block };
  Kind kind = Kind::DegRevLex;
  std::vector<int64_t> weights;  // Kind::Weighted
  int block_split = 0;           // Kind::Block

  static TermOrder degrevlex() { return {}; }
  static TermOrder deglex() { return {Kind::DegLex, {}, 0}; }
  static TermOrder lex() { return {Kind::Lex, {}, 0}; }
  static TermOrder weighted(std::vector<int64_t> w) {
    return {Kind::Weighted, std::move(w), 0};
  }
  static TermOrder elimination_block(int first_block_size) {
    return {Kind::Block, {}, first_block_size};
  }
  // "degrevlex" | "deglex" | "lex"
  static TermOrder parse(const std::string& name);

  // <0, 0, >0  as a < b, a == b, a > b
  int cmp(const Exps& a, const Exps& b) const;

  // Orders refining total degree; required for Weyl reduction to terminate.
  bool degree_compatible() const {
    return kind == Kind::DegRevLex || kind == Kind::DegLex;
  }

  bool operator==(const TermOrder&) const = default;

  std::string name() const;
};

}  // namespace taut
