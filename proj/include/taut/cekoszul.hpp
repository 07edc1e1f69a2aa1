#pragma once

#include <map>

#include "taut/ratmat.hpp"
#include "taut/tautsys.hpp"

namespace taut {

// Element of degree -ell of the complex: coefficients indexed by strictly
// increasing wedge index lists into the Lie algebra basis. Coefficients are
// Weyl elements representing classes of D_V (x) O_Ybar, kept reduced.
struct Cochain {
  int ell = 0;
  std::map<std::vector<int>, WeylElement> terms;

  bool is_zero() const { return terms.empty(); }
  // canonical insert: sorts the wedge, tracks the sign, drops repeats
  void add(std::vector<int> wedge, const WeylElement& coeff);

  std::string str() const;  // one "[i1^i2^...] <element>" line per term
};

Cochain parse_cochain(const std::string& text, int nvars);

// Truncated homology diagnostics at a fixed C^*-weight: matrix ranks per
// wedge degree on the Bernstein-degree slice, with the boundary dimensions
// intersected back into the slice. Always labeled truncated.
struct HomologyProfile {
  int weight = 0;
  int cap = 0;
  struct Row {
    int ell;
    std::size_t dim;           // slice dimension at degree -ell
    int rank;                  // rank of the differential out of degree -ell
    int boundaries_in_slice;   // dim(image from degree -(ell+1), inside the slice)
    long apparent_homology;    // nullity - boundaries_in_slice
  };
  std::vector<Row> rows;
  bool truncated = true;
};

// The Chevalley-Eilenberg / Euler-Koszul complex with terms
// D_V (x) O_Ybar (x) wedge^ell(g) and the beta'-twisted differential.
class CEComplex {
 public:
  // `twist` is the character entering the right action (the beta' of the
  // derived system when the complex is built from beta)
  CEComplex(RepData rep, OrbitClosureData Y, Character twist);

  // complex computing the derived system of beta: twist = trace drho - beta
  static CEComplex for_beta(const RepData& rep, OrbitClosureData Y, const Character& beta);

  const RepData& rep() const { return rep_; }
  const OrbitClosureData& orbit() const { return Y_; }
  const Character& twist() const { return twist_; }
  int wedge_rank() const { return rep_.lie().dim(); }

  // representative of D_V (x) O_Ybar: the x-part of every term is put into
  // normal form against the ideal (with the Weyl correction terms)
  WeylElement reduce_coefficient(const WeylElement& P) const;

  // P |-> P * Z(xi_j) - twist(xi_j) * P, reduced
  WeylElement right_action(const WeylElement& P, int j) const;

  // the two-sum differential; input degree -ell with ell >= 1
  Cochain differential(const Cochain& c) const;

  // cycle test: reduces every coefficient of the differential; the residual
  // is returned for inspection when nonzero
  struct CycleResult {
    bool is_cycle;
    Cochain residual;
  };
  CycleResult cycle_check(const Cochain& c) const;

  // ideal generated by the ideal generators and the images of 1 (x) xi_j;
  // checked to agree with the direct cyclic presentation (mutual membership)
  WeylIdeal h0_presentation() const;

  HomologyProfile truncated_homology_profile(int weight, int bernstein_cap,
                                             std::size_t max_slice = 200000) const;

 private:
  RepData rep_;
  OrbitClosureData Y_;
  Character twist_;
  std::vector<WeylElement> fields_;  // cached Z(xi_j)
};

// The explicit alternating cycle of the degree-d Veronese of P^(n-1), a
// cochain of wedge degree n^2 - n over gl(n); requires d | n. Coefficients
// are reduced against C's ideal (C must be the matching Veronese complex).
Cochain veronese_zeta(int n, int d, const CEComplex& C);

}  // namespace taut
