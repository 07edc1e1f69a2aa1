#pragma once

#include <vector>

#include "taut/groebner.hpp"

namespace taut {

using IntMat = std::vector<std::vector<mpz_class>>;  // row-major

// Z-basis of { u in Z^N : A u = 0 }. The kernel of an integer matrix is a
// saturated lattice, so this basis generates all integer relations.
std::vector<std::vector<mpz_class>> integer_kernel_basis(const IntMat& A);

// Lattice ideal I_A = ( x^u - x^v : Au = Av ), computed from a kernel basis
// by saturating the lattice-basis ideal at x1...xN with the extra-variable
// trick (t * x1...xN - 1, eliminate t). `step_budget` caps the saturation
// Groebner run (ResourceError when exceeded).
PolyIdeal toric_ideal(const IntMat& A, long step_budget = 2'000'000);

// A-degree of a monomial: A * e. Throws if p is not A-homogeneous when
// called through toric_degree(Poly).
std::vector<mpz_class> toric_degree(const IntMat& A, const Exps& e);
std::vector<mpz_class> toric_degree(const IntMat& A, const Poly& p);

}  // namespace taut
