#pragma once

#include <optional>

#include "taut/bfunction.hpp"
#include "taut/groebner.hpp"
#include "taut/repdata.hpp"

namespace taut {

// Defining data of the orbit closure: its vanishing ideal plus optional
// Gorenstein/complete-intersection decorations.
struct OrbitClosureData {
  PolyIdeal ideal;
  int dim_Y = 0;
  std::optional<std::vector<Rat>> gamma_values;  // user-supplied character values
  std::optional<std::vector<int>> ci_degrees;

  OrbitClosureData(PolyIdeal I, int dim_Y,
                   std::optional<std::vector<Rat>> gamma = std::nullopt,
                   std::optional<std::vector<int>> ci = std::nullopt);

  bool is_homogeneous() const;
};

struct StabilityReport {
  struct Entry {
    int basis_index;  // xi_j
    int gen_index;    // f
    bool ok;
    Poly residual;
  };
  std::vector<Entry> entries;
  bool all_ok = true;
};

// Reduces Z_V(xi_j)(f) against the ideal for every (basis element, generator)
// pair. All pairs must pass for the cyclic presentation to be well-posed.
StabilityReport check_g_stability(const RepData& rep, const OrbitClosureData& Y);

// Cyclic presentation of the Fourier-transformed tautological system: the
// left ideal generated by the polynomial generators together with the twisted
// vector fields Z_V(xi_j) - beta'(xi_j).
struct TautPresentation {
  WeylIdeal weyl_ideal;
  RepData rep;
  Character beta;
  Character beta_prime;
  bool includes_scaling = true;
};

// `includes_scaling = false` drops the generator of the flagged scaling
// element (the e-less system the b-function engine works on).
TautPresentation build_taut(const RepData& rep, const OrbitClosureData& Y,
                            const Character& beta, bool includes_scaling = true);

// 1 lies in the ideal iff the module vanishes.
bool is_nonzero(const TautPresentation& T);

// Groebner verdict cross-checked against the root test of the e-less
// b-function; a disagreement is an internal defect.
struct NonzeroVerdict {
  bool nonzero;
  std::optional<bool> agrees_with_bfunction;
};
NonzeroVerdict is_nonzero_crosschecked(const TautPresentation& T, const BFunction& b0);

// dim V - Z_V(e), the operator the b-function engine tracks
WeylElement theta_operator(const RepData& rep);

// convenience constructors for the worked families

// degree-d monomial exponents in n variables, in the coordinate order used by
// the Veronese constructors (descending lexicographic)
std::vector<Exps> veronese_exponents(int n, int d);

// gl(n) acting on Sym^d C^n; basis E_ij in row-major order
RepData veronese_rep(int n, int d);

// vanishing ideal of the cone over the d-th Veronese of P^(n-1), as a lattice
// ideal (certifiable by the toric membership oracle)
PolyIdeal veronese_ideal(int n, int d);

// 2 x 2 minors of the generic p x q matrix with row-major coordinates
PolyIdeal segre_ideal(int p, int q);

}  // namespace taut
