#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "taut/weyl.hpp"

namespace taut {

using RatMatrix = std::vector<std::vector<Rat>>;  // row-major, square

// Finite-dimensional Lie algebra given by structure constants over Q:
// [xi_i, xi_j] = sum_k c[i][j][k] xi_k. Antisymmetry and the Jacobi identity
// are checked at construction. An optional distinguished scaling element e
// supports the C* x G_0 setups.
class LieAlgebra {
 public:
  LieAlgebra(int dim, std::vector<std::vector<std::vector<Rat>>> c,
             std::optional<int> scaling_element = std::nullopt);

  // sparse (i, j, coefficients) bracket table, 0-based, i < j entries only
  static LieAlgebra from_brackets(
      int dim, const std::vector<std::tuple<int, int, std::vector<Rat>>>& table,
      std::optional<int> scaling_element = std::nullopt);

  static LieAlgebra abelian(int dim, std::optional<int> scaling_element = std::nullopt);

  int dim() const { return m_; }
  const std::vector<Rat>& bracket(int i, int j) const { return c_[i][j]; }
  std::optional<int> scaling_element() const { return e_; }

  // dim of span{ [xi_i, xi_j] }; the algebra is perfect iff this equals dim
  int derived_rank() const;
  bool is_perfect() const { return derived_rank() == m_; }

  // perfectness of the span of the non-e basis elements; requires a flagged,
  // central e. This is the semisimplicity proxy used by the Gorenstein
  // character formula.
  bool g0_is_perfect() const;

  bool operator==(const LieAlgebra&) const = default;

 private:
  int m_;
  std::vector<std::vector<std::vector<Rat>>> c_;
  std::optional<int> e_;
};

// Linear functional on the Lie algebra vanishing on brackets. Arithmetic is
// componentwise; operands must live on the same algebra.
class Character {
 public:
  Character(LieAlgebra lie, std::vector<Rat> values);

  int dim() const { return static_cast<int>(v_.size()); }
  const LieAlgebra& lie() const { return lie_; }
  const std::vector<Rat>& values() const { return v_; }
  const Rat& operator[](int i) const { return v_[i]; }

  // value on the flagged scaling element
  const Rat& on_e() const;

  Character operator+(const Character& o) const;
  Character operator-(const Character& o) const;
  Character operator-() const;
  bool operator==(const Character&) const = default;

  bool is_zero() const;
  std::string str() const;  // "(a, b, ...)" with exact rationals

 private:
  LieAlgebra lie_;
  std::vector<Rat> v_;
};

Character trace_ad(const LieAlgebra& lie);

// Representation data: drho(xi_j) as N x N rational matrices, checked to be a
// Lie algebra homomorphism (and drho(e) = id when e is flagged).
class RepData {
 public:
  RepData(LieAlgebra lie, int N, std::vector<RatMatrix> matrices);

  const LieAlgebra& lie() const { return lie_; }
  int N() const { return N_; }
  const RatMatrix& matrix(int j) const { return rho_[j]; }

  // Z_V(xi_j) = -sum_{k,l} drho(xi_j)_{kl} x_l d_k; weight 0, Bernstein deg 2
  WeylElement vector_field(int j) const;

  // derivation action of Z_V(xi_j) on a polynomial
  Poly apply_field(int j, const Poly& f) const;

  Character trace_drho() const;
  Character trace_ad() const { return taut::trace_ad(lie_); }
  Character beta_prime(const Character& beta) const;
  Character zero_character() const;
  Character character(std::vector<Rat> values) const;

 private:
  LieAlgebra lie_;
  int N_;
  std::vector<RatMatrix> rho_;
};

}  // namespace taut
