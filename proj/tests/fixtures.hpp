#pragma once

// The worked examples every suite drives: the quadric cone (C* x SL2 on
// Sym^2 C^2), the Segre cone (C* x SL2 x SL2 on C^2 (x) C^2), and torus
// instances from integer matrices.

#include <optional>

#include "taut/repdata.hpp"
#include "taut/toric.hpp"

namespace taut::fixtures {

inline RatMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  RatMatrix M;
  for (auto& r : rows) {
    M.emplace_back();
    for (long v : r) M.back().emplace_back(v);
  }
  return M;
}

inline RatMatrix identity(int n) {
  RatMatrix M(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < n; ++i) M[i][i] = 1;
  return M;
}

// basis (e, h, E, F); V = Sym^2 C^2 in coordinates where the cone over the
// degree-2 Veronese of P^1 is x1 x3 - x2^2
inline RepData quadric_cone_rep() {
  auto lie = LieAlgebra::from_brackets(
      4,
      {{1, 2, {Rat(0), Rat(0), Rat(2), Rat(0)}},
       {1, 3, {Rat(0), Rat(0), Rat(0), Rat(-2)}},
       {2, 3, {Rat(0), Rat(1), Rat(0), Rat(0)}}},
      0);
  std::vector<RatMatrix> ms = {
      identity(3),
      mat({{2, 0, 0}, {0, 0, 0}, {0, 0, -2}}),
      mat({{0, 2, 0}, {0, 0, 1}, {0, 0, 0}}),
      mat({{0, 0, 0}, {1, 0, 0}, {0, 2, 0}}),
  };
  return RepData(std::move(lie), 3, std::move(ms));
}

inline Poly quadric_cone_ideal_gen() { return parse_poly("x1 x3 - x2^2", 3); }

// basis (e, h1, E1, F1, h2, E2, F2); V = C^2 (x) C^2 with matrix coordinates
// (x1, x2; x3, x4); the cone over P^1 x P^1 is x1 x4 - x2 x3
inline RepData segre_cone_rep() {
  auto lie = LieAlgebra::from_brackets(
      7,
      {{1, 2, {Rat(0), Rat(0), Rat(2), Rat(0), Rat(0), Rat(0), Rat(0)}},
       {1, 3, {Rat(0), Rat(0), Rat(0), Rat(-2), Rat(0), Rat(0), Rat(0)}},
       {2, 3, {Rat(0), Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0)}},
       {4, 5, {Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(2), Rat(0)}},
       {4, 6, {Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(-2)}},
       {5, 6, {Rat(0), Rat(0), Rat(0), Rat(0), Rat(1), Rat(0), Rat(0)}}},
      0);
  std::vector<RatMatrix> ms = {
      identity(4),
      mat({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}}),
      mat({{0, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}}),
      mat({{0, 0, 0, 0}, {0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}}),
      mat({{1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}}),
      mat({{0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}}),
      mat({{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 1, 0}}),
  };
  return RepData(std::move(lie), 4, std::move(ms));
}

inline Poly segre_cone_ideal_gen() { return parse_poly("x1 x4 - x2 x3", 4); }

// torus representation from an integer matrix: abelian algebra of rank d,
// drho(xi_i) = diag(row i); the scaling element is an all-ones row if any
inline RepData torus_rep(const IntMat& A) {
  int d = static_cast<int>(A.size());
  int N = static_cast<int>(A[0].size());
  std::optional<int> e;
  for (int i = 0; i < d && !e; ++i) {
    bool ones = true;
    for (auto& v : A[i]) ones = ones && v == 1;
    if (ones) e = i;
  }
  std::vector<RatMatrix> ms;
  for (int i = 0; i < d; ++i) {
    RatMatrix M(N, std::vector<Rat>(N, Rat(0)));
    for (int j = 0; j < N; ++j) M[j][j] = Rat(A[i][j]);
    ms.push_back(std::move(M));
  }
  return RepData(LieAlgebra::abelian(d, e), N, std::move(ms));
}

inline IntMat twisted_cubic_slice() {
  return {{mpz_class(1), mpz_class(1), mpz_class(1)},
          {mpz_class(0), mpz_class(1), mpz_class(2)}};
}

}  // namespace taut::fixtures
