#pragma once

#include <vector>

#include "taut/order.hpp"

namespace taut::gm {

// Critical-pair bookkeeping shared by the commutative and the Weyl Buchberger
// loops. Works on (commutative) leading monomials only.
struct Pair {
  int i, j;
  Exps lcm;
  int64_t deg;
};

// Gebauer-Moeller update on adding basis element t. The product criterion is
// only sound in the commutative ring; the Weyl engine passes false.
void update(std::vector<Pair>& pairs, const std::vector<Exps>& lms, int t,
            bool use_product_criterion);

// normal selection strategy: smallest lcm degree, ties by order then indices
std::size_t select(const std::vector<Pair>& pairs, const TermOrder& ord);

}  // namespace taut::gm
