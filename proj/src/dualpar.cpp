#include "taut/dualpar.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "taut/errors.hpp"

namespace taut {

Character gorenstein_gamma_ci(const RepData& rep, const OrbitClosureData& Y) {
  if (!Y.ci_degrees)
    throw PreconditionError("gamma from the CI formula needs ci_degrees");
  auto e = rep.lie().scaling_element();
  if (!e) throw PreconditionError("gamma from the CI formula needs a flagged scaling element");
  if (!rep.lie().g0_is_perfect())
    throw PreconditionError("the CI formula assumes a perfect (semisimple) g_0");
  Rat ge(rep.N());
  for (int d : *Y.ci_degrees) ge -= d;
  std::vector<Rat> v(rep.lie().dim(), Rat(0));
  v[*e] = ge;
  return rep.character(std::move(v));
}

Character dual_parameter(const Character& beta, const Character& gamma,
                         const LieAlgebra& lie) {
  return trace_ad(lie) + gamma - beta;
}

bool b_symmetry_check(const BFunction& b_beta0, const BFunction& b_dual, const Rat& gamma_e) {
  if (b_beta0.degree() != b_dual.degree()) return false;
  return reflect(b_dual, gamma_e).coeffs == b_beta0.coeffs;
}

DualityReport simple_root_duality(const BFunction& b, const Character& beta,
                                  const Character& gamma, const OrbitClosureData& Y) {
  const LieAlgebra& lie = beta.lie();
  if (lie.dim() != Y.dim_Y + 1)
    throw PreconditionError("the simple-root statement is for dim G = dim Y + 1");
  DualityReport rep;
  rep.beta = beta;
  rep.gamma = gamma;
  rep.gamma_source = "caller";
  rep.trace_ad_char = trace_ad(lie);
  rep.shift = Y.dim_Y - lie.dim();
  rep.caveats.push_back("finitely many orbits assumed");
  rep.caveats.push_back("Gorenstein with equivariantly trivial dualizing module assumed");

  const Rat& be = beta.on_e();
  if (!is_root(b, be)) {
    rep.theorem = "tau-zero";
    rep.caveats.push_back("beta(e) is not a root of the b-function, so the module vanishes");
    return rep;
  }
  rep.beta_tilde = dual_parameter(beta, gamma, lie);
  if (is_simple_root(b, be)) {
    rep.theorem = "simple-root-dual";
  } else {
    rep.theorem = "Gorenstein-general";
    rep.caveats.push_back("beta(e) is a multiple root; only the cohomological statement applies");
  }
  return rep;
}

namespace {

bool in_window(const Rat& beta_e, const std::vector<Rat>& roots, int n,
               const std::function<bool(const mpz_class&)>& accept) {
  for (auto& r : roots) {
    Rat diff = beta_e - Rat(n) * (Rat(1) + r);
    if (rat_is_integer(diff) && accept(diff.get_num())) return true;
  }
  return false;
}

}  // namespace

std::vector<Rat> finite_exception_set(const std::vector<Rat>& roots_bD, int n) {
  // v = n(1+r) + p = n(1+r') + q with p > 0 >= q forces p - q = n(r' - r),
  // a positive integer; then p runs through 1..(p-q)
  std::vector<Rat> out;
  for (auto& r : roots_bD) {
    for (auto& r2 : roots_bD) {
      Rat diff = Rat(n) * (r2 - r);
      if (!rat_is_integer(diff) || diff <= 0) continue;
      long D = mpz_get_si(diff.get_num().get_mpz_t());
      for (long p = 1; p <= D; ++p) {
        Rat v = Rat(n) * (Rat(1) + r) + p;
        bool seen = false;
        for (auto& x : out) seen = seen || x == v;
        if (!seen) out.push_back(v);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

LFDClassification lfd_window_check(const LFDWindow& w) {
  if (w.roots_bD.empty()) throw PreconditionError("roots of b_D must be nonempty");
  if (w.n < 1) throw PreconditionError("ambient dimension must be >= 1");
  LFDClassification c;
  c.in_positive_window =
      in_window(w.beta_e, w.roots_bD, w.n, [](const mpz_class& z) { return z > 0; });
  c.in_nonpositive_window =
      in_window(w.beta_e, w.roots_bD, w.n, [](const mpz_class& z) { return z <= 0; });
  c.half_integer = rat_is_half_integer(w.beta_e);
  c.in_integer_window = c.in_positive_window || c.in_nonpositive_window;

  c.direct_image = !c.in_positive_window;
  c.proper_image = !c.in_nonpositive_window;
  c.duality_morphism = c.half_integer && !c.in_positive_window;
  c.simple_pure = !c.in_integer_window;
  c.finite_exceptions = finite_exception_set(w.roots_bD, w.n);
  c.caveats.push_back("strongly Koszul (finitely many orbits) assumed");
  c.caveats.push_back(
      "mixed-Hodge-module conclusions are cited, not computed; they hold outside the finite "
      "exception set");
  return c;
}

namespace {

int rational_rank(const IntMat& A) {
  std::vector<std::vector<Rat>> rows;
  for (auto& r : A) {
    rows.emplace_back();
    for (auto& v : r) rows.back().emplace_back(Rat(v));
  }
  // reuse the dense solver's elimination by ranking against a zero rhs
  int rank = 0;
  std::size_t m = rows.size(), n = m ? rows[0].size() : 0, rr = 0;
  for (std::size_t col = 0; col < n && rr < m; ++col) {
    std::size_t p = rr;
    while (p < m && rows[p][col] == 0) ++p;
    if (p == m) continue;
    std::swap(rows[p], rows[rr]);
    for (std::size_t k = 0; k < m; ++k) {
      if (k == rr || rows[k][col] == 0) continue;
      Rat f = rows[k][col] / rows[rr][col];
      for (std::size_t j = col; j < n; ++j) rows[k][j] -= f * rows[rr][j];
    }
    ++rr;
    ++rank;
  }
  return rank;
}

}  // namespace

DualityReport gkz_dual(const IntMat& A, const std::vector<Rat>& beta,
                       std::optional<std::vector<Rat>> user_gamma) {
  int d = static_cast<int>(A.size());
  if (d == 0) throw ValidationError("empty matrix");
  if (rational_rank(A) != d)
    throw PreconditionError("gkz_dual requires a matrix of full row rank");
  if (static_cast<int>(beta.size()) != d)
    throw ValidationError("beta must have one entry per row of A");

  auto lie = LieAlgebra::abelian(d);
  auto make_char = [&](std::vector<Rat> v) { return Character(lie, std::move(v)); };

  DualityReport rep;
  rep.beta = make_char(beta);
  rep.trace_ad_char = make_char(std::vector<Rat>(d, Rat(0)));  // abelian
  rep.shift = 0;                                               // dim Y = rank A = dim G
  rep.theorem = "GKZ";
  rep.caveats.push_back("torus case: trace ad = 0 and dim Y = dim G");

  std::vector<Rat> trace_drho(d, Rat(0));
  int N = static_cast<int>(A[0].size());
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < N; ++j) trace_drho[i] += Rat(A[i][j]);
  rep.beta_prime = make_char(trace_drho) - *rep.beta;

  PolyIdeal I = toric_ideal(A);

  std::optional<std::vector<Rat>> gamma;
  if (user_gamma) {
    if (static_cast<int>(user_gamma->size()) != d)
      throw ValidationError("gamma must have one entry per row of A");
    gamma = std::move(user_gamma);
    rep.gamma_source = "user";
  } else {
    // derive gamma from the A-graded complete-intersection structure:
    // gamma = trace drho - sum of the A-degrees of a regular sequence
    int k = N - d;
    const auto& gb = I.groebner(TermOrder::degrevlex());
    std::vector<std::vector<Poly>> candidates;
    if (static_cast<int>(gb.size()) == k) {
      candidates.push_back(gb);
    } else if (k == 0 && I.is_zero_ideal()) {
      candidates.push_back({});
    } else if (static_cast<int>(gb.size()) > k) {
      // search small subsets that still generate
      std::vector<int> idx(gb.size());
      std::iota(idx.begin(), idx.end(), 0);
      std::vector<int> pick(k);
      std::function<bool(int, int)> rec = [&](int from, int got) -> bool {
        if (got == k) {
          std::vector<Poly> sub;
          for (int i : pick) sub.push_back(gb[i]);
          auto sub_gb = buchberger(sub, TermOrder::degrevlex());
          for (auto& g : gb)
            if (!reduce_full(g, sub_gb, TermOrder::degrevlex()).is_zero()) return false;
          candidates.push_back(std::move(sub));
          return true;
        }
        for (int i = from; i < static_cast<int>(gb.size()); ++i) {
          pick[got] = i;
          if (rec(i + 1, got + 1)) return true;
        }
        return false;
      };
      if (gb.size() <= 12) rec(0, 0);
    }
    if (!candidates.empty()) {
      std::vector<Rat> g = trace_drho;
      for (auto& f : candidates.front()) {
        auto deg = toric_degree(A, f);
        for (int i = 0; i < d; ++i) g[i] -= Rat(deg[i]);
      }
      gamma = std::move(g);
      rep.gamma_source = "gkz-grading";
    } else {
      rep.gamma_source = "unknown";
      rep.caveats.push_back(
          "the toric ideal is not a detected complete intersection and no gamma was supplied; "
          "no duality parameter is reported");
    }
  }

  if (gamma) {
    rep.gamma = make_char(*gamma);
    rep.beta_tilde = dual_parameter(*rep.beta, *rep.gamma, lie);
    rep.caveats.push_back("Gorenstein via the A-graded complete intersection structure");
  }
  rep.caveats.push_back("finitely many orbits assumed");
  return rep;
}

}  // namespace taut
