#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <string_view>

namespace taut {

// Exact rational scalar. mpq_class keeps values in lowest terms with a
// positive denominator, which is exactly the canonical form we need.
using Rat = mpq_class;

// Parses "p", "-p", "p/q" (q > 0 after normalization). Throws
// std::invalid_argument on anything else.
Rat parse_rat(std::string_view s);

// Prints "p" or "p/q" with q > 1.
std::string rat_str(const Rat& r);

inline bool rat_is_integer(const Rat& r) { return r.get_den() == 1; }

// r = p/q with q | 2 after reduction (membership in (1/2)Z).
inline bool rat_is_half_integer(const Rat& r) {
  return r.get_den() == 1 || r.get_den() == 2;
}

}  // namespace taut
