#include "taut/toric.hpp"

#include <algorithm>

#include "taut/errors.hpp"

namespace taut {

std::vector<std::vector<mpz_class>> integer_kernel_basis(const IntMat& A) {
  if (A.empty()) return {};
  std::size_t d = A.size(), N = A[0].size();
  for (auto& row : A)
    if (row.size() != N) throw ValidationError("ragged integer matrix");

  // column-style Hermite reduction: H = A*U with U unimodular; kernel basis =
  // columns of U over zero columns of H
  IntMat H = A;
  IntMat U(N, std::vector<mpz_class>(N, 0));
  for (std::size_t i = 0; i < N; ++i) U[i][i] = 1;

  auto col_swap = [&](std::size_t a, std::size_t b) {
    for (std::size_t r = 0; r < d; ++r) std::swap(H[r][a], H[r][b]);
    for (std::size_t r = 0; r < N; ++r) std::swap(U[r][a], U[r][b]);
  };
  auto col_axpy = [&](std::size_t dst, std::size_t src, const mpz_class& q) {
    // col_dst -= q * col_src
    for (std::size_t r = 0; r < d; ++r) H[r][dst] -= q * H[r][src];
    for (std::size_t r = 0; r < N; ++r) U[r][dst] -= q * U[r][src];
  };
  auto col_negate = [&](std::size_t c) {
    for (std::size_t r = 0; r < d; ++r) H[r][c] = -H[r][c];
    for (std::size_t r = 0; r < N; ++r) U[r][c] = -U[r][c];
  };

  std::size_t pivot_col = 0;
  for (std::size_t row = 0; row < d && pivot_col < N; ++row) {
    // gcd out the row's tail via Euclidean column steps
    while (true) {
      std::size_t best = N;
      for (std::size_t c = pivot_col; c < N; ++c) {
        if (H[row][c] == 0) continue;
        if (best == N || abs(H[row][c]) < abs(H[row][best])) best = c;
      }
      if (best == N) break;  // row is zero from pivot_col on
      col_swap(pivot_col, best);
      if (H[row][pivot_col] < 0) col_negate(pivot_col);
      bool cleared = true;
      for (std::size_t c = pivot_col + 1; c < N; ++c) {
        if (H[row][c] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), H[row][c].get_mpz_t(), H[row][pivot_col].get_mpz_t());
        col_axpy(c, pivot_col, q);
        if (H[row][c] != 0) cleared = false;
      }
      if (cleared) {
        ++pivot_col;
        break;
      }
    }
  }

  std::vector<std::vector<mpz_class>> basis;
  for (std::size_t c = pivot_col; c < N; ++c) {
    std::vector<mpz_class> v(N);
    bool zero = true;
    for (std::size_t r = 0; r < N; ++r) {
      v[r] = U[r][c];
      if (v[r] != 0) zero = false;
    }
    if (!zero) basis.push_back(std::move(v));
  }
  return basis;
}

PolyIdeal toric_ideal(const IntMat& A, long step_budget) {
  if (A.empty()) throw ValidationError("toric_ideal: empty matrix");
  std::size_t N = A[0].size();
  for (std::size_t c = 0; c < N; ++c) {
    bool zero = true;
    for (auto& row : A)
      if (row[c] != 0) zero = false;
    if (zero) throw PreconditionError("toric_ideal: matrix has a zero column");
  }

  auto basis = integer_kernel_basis(A);
  int n = static_cast<int>(N);
  if (basis.empty()) return PolyIdeal(n, {});

  // lattice-basis binomials in the extended ring (t, x1..xN)
  std::vector<Poly> gens;
  for (auto& u : basis) {
    Exps plus(n + 1, 0), minus(n + 1, 0);
    for (int i = 0; i < n; ++i) {
      if (!u[i].fits_sint_p())
        throw ResourceError("toric_ideal: kernel basis entry exceeds exponent range");
      long v = mpz_get_si(u[i].get_mpz_t());
      if (v > 0) plus[i + 1] = static_cast<int32_t>(v);
      if (v < 0) minus[i + 1] = static_cast<int32_t>(-v);
    }
    Poly b = Poly::monomial(n + 1, plus, 1) - Poly::monomial(n + 1, minus, 1);
    if (!b.is_zero()) gens.push_back(b);
  }
  // t * x1...xN - 1
  Exps all(n + 1, 1);
  gens.push_back(Poly::monomial(n + 1, all, 1) - Poly(n + 1, Rat(1)));

  auto gb = buchberger(gens, TermOrder::elimination_block(1), step_budget);

  // keep the t-free part and drop t from the exponent vectors
  std::vector<Poly> kept;
  for (auto& g : gb) {
    bool has_t = false;
    for (auto& [e, c] : g.terms())
      if (e[0] > 0) has_t = true;
    if (has_t) continue;
    Poly q(n);
    for (auto& [e, c] : g.terms()) q.add_term(Exps(e.begin() + 1, e.end()), c);
    kept.push_back(std::move(q));
  }
  PolyIdeal I(n, kept);
  I.groebner(TermOrder::degrevlex());
  return I;
}

std::vector<mpz_class> toric_degree(const IntMat& A, const Exps& e) {
  std::vector<mpz_class> deg(A.size(), 0);
  for (std::size_t r = 0; r < A.size(); ++r)
    for (std::size_t c = 0; c < e.size(); ++c) deg[r] += A[r][c] * e[c];
  return deg;
}

std::vector<mpz_class> toric_degree(const IntMat& A, const Poly& p) {
  if (p.is_zero()) throw PreconditionError("toric_degree of zero polynomial");
  auto it = p.terms().begin();
  auto deg = toric_degree(A, it->first);
  for (++it; it != p.terms().end(); ++it)
    if (toric_degree(A, it->first) != deg)
      throw PreconditionError("polynomial is not homogeneous for the A-grading");
  return deg;
}

}  // namespace taut
