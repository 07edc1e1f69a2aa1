#pragma once

#include <map>
#include <optional>
#include <string>

#include "taut/order.hpp"
#include "taut/rational.hpp"

namespace taut {

// Multivariate polynomial over Q in x1..xN. Terms are kept in a map keyed by
// exponent vector; zero coefficients are never stored.
class Poly {
 public:
  Poly() = default;
  explicit Poly(int nvars) : nvars_(nvars) {}
  Poly(int nvars, const Rat& c);  // constant

  static Poly variable(int nvars, int i, int power = 1);
  static Poly monomial(int nvars, Exps e, Rat c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Exps, Rat>& terms() const { return terms_; }

  int64_t degree() const;  // -1 for the zero polynomial
  bool is_homogeneous() const;

  void add_term(const Exps& e, const Rat& c);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;
  Poly operator*(const Rat& c) const;
  bool operator==(const Poly& o) const = default;

  // Leading data with respect to `ord` (scan; fine at this scale).
  const Exps& lead_monomial(const TermOrder& ord) const;
  const Rat& lead_coeff(const TermOrder& ord) const;

  // Formal partial derivative d/dx_i.
  Poly derivative(int i) const;

  // Substitutes x_i -> values[i]; used for univariate evaluation too.
  Rat eval(const std::vector<Rat>& values) const;

  // Text form: "-3/2 x1^2 x3 + x2 - 1"; empty polynomial prints "0".
  // `var` is the variable prefix ("x" here, "s" for b-functions).
  std::string str(const std::string& var = "x") const;

  friend Poly parse_poly(std::string_view s, int nvars);

 private:
  int nvars_ = 0;
  std::map<Exps, Rat> terms_;
};

// Parses the polynomial grammar: '+'/'-'-separated terms, each an optional
// rational coefficient followed by variable powers "x3^2" (space or '*'
// separated). Round-trips exactly with Poly::str().
Poly parse_poly(std::string_view s, int nvars);

}  // namespace taut
