#pragma once

#include <optional>
#include <vector>

#include "taut/weyl.hpp"

namespace taut {

// Left ideal of the Weyl algebra with a cached left Groebner basis.
class WeylIdeal {
 public:
  WeylIdeal() = default;
  WeylIdeal(int nvars, std::vector<WeylElement> generators);

  int nvars() const { return nvars_; }
  const std::vector<WeylElement>& generators() const { return gens_; }

  // Reduced left basis. The order must refine total degree (reduction in D_V
  // terminates only then); anything else is a configuration error.
  const std::vector<WeylElement>& groebner(
      const TermOrder& ord = TermOrder::degrevlex()) const;

  bool contains_one(const TermOrder& ord = TermOrder::degrevlex()) const;

 private:
  int nvars_ = 0;
  std::vector<WeylElement> gens_;
  mutable std::optional<std::vector<WeylElement>> gb_;
  mutable TermOrder order_;
};

// One-sided (left) full reduction of p against basis G.
WeylElement weyl_reduce_full(const WeylElement& p, const std::vector<WeylElement>& G,
                             const TermOrder& ord);

std::vector<WeylElement> weyl_left_buchberger(std::vector<WeylElement> gens,
                                              const TermOrder& ord,
                                              long step_budget = 0);

// Fully reduced remainder; zero iff p lies in the left ideal J.
WeylElement weyl_normal_form(const WeylElement& p, const WeylIdeal& J);
WeylElement weyl_normal_form(const WeylElement& p, const WeylIdeal& J,
                             const TermOrder& ord);

}  // namespace taut
