#pragma once

#include <optional>
#include <string>
#include <vector>

#include "taut/weyl_groebner.hpp"

namespace taut {

// Monic univariate polynomial b(s) over Q together with the operator it was
// computed against.
struct BFunction {
  std::vector<Rat> coeffs;  // ascending powers; coeffs.back() == 1
  WeylElement theta;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  Rat eval(const Rat& v) const;
  std::vector<Rat> rational_roots() const;  // exact, via the factor theorem
  std::string str() const;                  // e.g. "s^2 - s"
};

bool is_root(const BFunction& b, const Rat& v);

// b(v) = 0 and b'(v) != 0
bool is_simple_root(const BFunction& b, const Rat& v);

// b(s) -> monic normalization of b(shift - s)
BFunction reflect(const BFunction& b, const Rat& shift);

struct BFunctionOutcome {
  enum class Status { Found, ZeroModule, CapExhausted };
  Status status;
  std::optional<BFunction> b;
  std::vector<WeylElement> residues;  // normal forms of theta^k, k = 0,1,...

  bool found() const { return status == Status::Found; }
};

// Minimal monic polynomial of right multiplication by theta on D/J0:
// iteratively reduces theta^k and searches for an exact monic dependency
// among the residues. Requires theta to normalize J0 (each basis element g
// must satisfy g*theta in J0; checked). The returned b always passes the
// certificate weyl_normal_form(b(theta), J0) == 0, and minimality is
// guaranteed by the linear independence of the lower-degree residues.
BFunctionOutcome minimal_polynomial_of_theta(const WeylIdeal& J0,
                                             const WeylElement& theta, int cap,
                                             const TermOrder& ord = TermOrder::degrevlex());

}  // namespace taut
