#pragma once

#include <functional>
#include <string>
#include <string_view>

#include "taut/order.hpp"
#include "taut/rational.hpp"

namespace taut {

// Term-list parser shared by the polynomial and Weyl-element grammars.
// `prefixes` lists the accepted variable prefixes ("x", or "xd"); `emit`
// receives each term's coefficient and one exponent vector per prefix.
void parse_terms(std::string_view s, int nvars, const std::string& prefixes,
                 const std::function<void(const Rat&, const std::vector<Exps>&)>& emit);

}  // namespace taut
