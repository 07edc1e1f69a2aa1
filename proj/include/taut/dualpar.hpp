#pragma once

#include <optional>
#include <string>
#include <vector>

#include "taut/bfunction.hpp"
#include "taut/tautsys.hpp"
#include "taut/toric.hpp"

namespace taut {

// Outcome of the duality-parameter calculus. `theorem` names the strongest
// statement whose hypotheses are met:
//   dim-equal          dual is the tautological system of beta~ (m = dim Y)
//   Gorenstein-general dual is H^(n-m) of the complex at beta~
//   simple-root-dual   dual is again tautological (m = dim Y + 1, simple root)
//   CM-only            only the symbolic dualizing-module formula applies
//   GKZ                torus specialization, beta~ = gamma - beta
//   tau-zero           the module vanishes at this parameter
// Every tag ships with the assumption ledger in `caveats`.
struct DualityReport {
  std::optional<Character> beta;
  std::optional<Character> beta_prime;
  std::optional<Character> gamma;
  std::string gamma_source;  // "user" | "ci-formula" | "gkz-grading" | "unknown"
  std::optional<Character> trace_ad_char;
  std::optional<Character> beta_tilde;
  int shift = 0;  // dim Y - dim G
  std::string theorem;
  std::vector<std::string> caveats;
};

// gamma(e) = dim V - d_1 - ... - d_k, zero on the semisimple part. Requires
// ci_degrees, a flagged central e, and a perfect g_0.
Character gorenstein_gamma_ci(const RepData& rep, const OrbitClosureData& Y);

// beta~ = trace ad + gamma - beta
Character dual_parameter(const Character& beta, const Character& gamma,
                         const LieAlgebra& lie);

// exact identity b_beta0(s) == monic normalization of b_dual(gamma_e - s)
bool b_symmetry_check(const BFunction& b_beta0, const BFunction& b_dual, const Rat& gamma_e);

// the dim G = dim Y + 1 sharpening: duality swaps the parameter when beta(e)
// is a simple root of b
DualityReport simple_root_duality(const BFunction& b, const Character& beta,
                                  const Character& gamma, const OrbitClosureData& Y);

struct LFDWindow {
  int n = 0;                // ambient dimension = degree of the divisor
  std::vector<Rat> roots_bD;  // input, never computed here
  Rat beta_e;
};

struct LFDClassification {
  bool in_positive_window = false;  // beta_e in n(1+roots) + Z_{>0}
  bool in_nonpositive_window = false;
  bool half_integer = false;
  bool in_integer_window = false;   // beta_e in n(1+roots) + Z
  // conclusions
  bool direct_image = false;        // beta_e avoids the positive window
  bool proper_image = false;        // beta_e avoids the nonpositive window
  bool duality_morphism = false;    // half-integral and avoids the positive window
  bool simple_pure = false;         // avoids every integer translate
  std::vector<Rat> finite_exceptions;
  std::vector<std::string> caveats;
};

LFDClassification lfd_window_check(const LFDWindow& w);

// exact intersection of (n(1+roots) + Z_{>0}) and (n(1+roots) + Z_{<=0});
// always finite
std::vector<Rat> finite_exception_set(const std::vector<Rat>& roots_bD, int n);

// torus case: abelian algebra from the rows of A, gamma from the A-graded
// complete-intersection structure of the toric ideal when it has one, or
// from `user_gamma`; "unknown" otherwise, never guessed
DualityReport gkz_dual(const IntMat& A, const std::vector<Rat>& beta,
                       std::optional<std::vector<Rat>> user_gamma = std::nullopt);

}  // namespace taut
