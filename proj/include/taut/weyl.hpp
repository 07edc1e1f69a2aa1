#pragma once

#include <map>
#include <string>

#include "taut/poly.hpp"

namespace taut {

// Normally ordered monomial x^a d^b of the Weyl algebra in N variables.
struct WeylKey {
  Exps x, d;
  auto operator<=>(const WeylKey&) const = default;

  int64_t bernstein_degree() const { return total_degree(x) + total_degree(d); }
  int64_t weight() const { return total_degree(x) - total_degree(d); }
  Exps concat() const {
    Exps e = x;
    e.insert(e.end(), d.begin(), d.end());
    return e;
  }
};

// Element of the Weyl algebra D_V, stored normally ordered (all x's left of
// all d's). Text grammar extends the polynomial one with d1..dN; a term's
// variables collect commutatively and denote the normally ordered monomial,
// so parse/print round-trip exactly.
class WeylElement {
 public:
  WeylElement() = default;
  explicit WeylElement(int nvars) : nvars_(nvars) {}
  WeylElement(int nvars, const Rat& c);

  static WeylElement from_poly(const Poly& p);
  static WeylElement x(int nvars, int i, int power = 1);
  static WeylElement d(int nvars, int i, int power = 1);
  static WeylElement monomial(int nvars, WeylKey k, Rat c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<WeylKey, Rat>& terms() const { return terms_; }

  // max over terms of |a|+|b|; -1 for 0
  int64_t bernstein_degree() const;
  // all terms share the same C^*-weight |a|-|b|
  bool is_weight_homogeneous() const;

  // the purely polynomial part requires every term to have d-exponent 0
  Poly x_part_as_poly() const;
  bool is_polynomial() const;

  void add_term(const WeylKey& k, const Rat& c);

  WeylElement& operator+=(const WeylElement& o);
  WeylElement& operator-=(const WeylElement& o);
  friend WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
  friend WeylElement operator-(WeylElement a, const WeylElement& b) { return a -= b; }
  WeylElement operator-() const;
  WeylElement operator*(const Rat& c) const;
  bool operator==(const WeylElement& o) const = default;

  const WeylKey& lead_key(const TermOrder& ord) const;  // on concat exponents
  const Rat& lead_coeff(const TermOrder& ord) const;

  std::string str() const;

 private:
  int nvars_ = 0;
  std::map<WeylKey, Rat> terms_;
};

// Normally ordered product via d_i x_j = x_j d_i + delta_ij.
WeylElement weyl_mul(const WeylElement& a, const WeylElement& b);

// [a, b] = ab - ba
WeylElement weyl_commutator(const WeylElement& a, const WeylElement& b);

WeylElement parse_weyl(std::string_view s, int nvars);

}  // namespace taut
