#pragma once

#include <optional>
#include <vector>

#include "taut/poly.hpp"

namespace taut {

// Commutative ideal with a lazily computed reduced Groebner basis cache.
class PolyIdeal {
 public:
  PolyIdeal() = default;
  PolyIdeal(int nvars, std::vector<Poly> generators);

  int nvars() const { return nvars_; }
  const std::vector<Poly>& generators() const { return gens_; }

  // Reduced Groebner basis w.r.t. `ord`; cached per order (single order kept).
  const std::vector<Poly>& groebner(const TermOrder& ord = TermOrder::degrevlex()) const;
  const TermOrder& cached_order() const { return order_; }

  bool is_zero_ideal() const { return gens_.empty(); }

 private:
  int nvars_ = 0;
  std::vector<Poly> gens_;
  mutable std::optional<std::vector<Poly>> gb_;
  mutable TermOrder order_;
};

// Full remainder of p on division by basis G (every term reduced).
Poly reduce_full(const Poly& p, const std::vector<Poly>& G, const TermOrder& ord);

// Buchberger with the Gebauer-Moeller pair criteria; returns the reduced
// basis, sorted ascending by leading monomial. `step_budget`, when positive,
// bounds the number of S-pair reductions (ResourceError beyond it).
std::vector<Poly> buchberger(std::vector<Poly> gens, const TermOrder& ord,
                             long step_budget = 0);

// Remainder of p under full reduction against I's (cached) basis.
// normal_form(p, I) == 0  iff  p lies in I.
Poly normal_form(const Poly& p, const PolyIdeal& I);
Poly normal_form(const Poly& p, const PolyIdeal& I, const TermOrder& ord);

bool contains_one(const std::vector<Poly>& gb);

}  // namespace taut
