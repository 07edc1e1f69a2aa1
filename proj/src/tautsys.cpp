#include "taut/tautsys.hpp"

#include <functional>
#include <map>
#include <sstream>

#include "taut/errors.hpp"
#include "taut/toric.hpp"

namespace taut {

OrbitClosureData::OrbitClosureData(PolyIdeal I, int dim, std::optional<std::vector<Rat>> gamma,
                                   std::optional<std::vector<int>> ci)
    : ideal(std::move(I)), dim_Y(dim), gamma_values(std::move(gamma)), ci_degrees(std::move(ci)) {
  if (dim_Y < 0 || dim_Y > ideal.nvars())
    throw ValidationError("orbit closure dimension must lie between 0 and dim V");
  if (ci_degrees) {
    if (ci_degrees->size() != ideal.generators().size())
      throw ValidationError("ci_degrees must list one degree per ideal generator");
    for (std::size_t i = 0; i < ci_degrees->size(); ++i) {
      const Poly& f = ideal.generators()[i];
      if (!f.is_homogeneous() || f.degree() != (*ci_degrees)[i]) {
        std::ostringstream msg;
        msg << "generator " << i + 1 << " is not homogeneous of the stated degree "
            << (*ci_degrees)[i];
        throw ValidationError(msg.str());
      }
    }
  }
}

bool OrbitClosureData::is_homogeneous() const {
  for (auto& g : ideal.generators())
    if (!g.is_homogeneous()) return false;
  return true;
}

StabilityReport check_g_stability(const RepData& rep, const OrbitClosureData& Y) {
  if (rep.N() != Y.ideal.nvars())
    throw ValidationError("representation and ideal live on different spaces");
  StabilityReport report;
  for (int j = 0; j < rep.lie().dim(); ++j) {
    for (std::size_t g = 0; g < Y.ideal.generators().size(); ++g) {
      Poly moved = rep.apply_field(j, Y.ideal.generators()[g]);
      Poly residual = normal_form(moved, Y.ideal);
      bool ok = residual.is_zero();
      report.all_ok = report.all_ok && ok;
      report.entries.push_back({j, static_cast<int>(g), ok, std::move(residual)});
    }
  }
  return report;
}

TautPresentation build_taut(const RepData& rep, const OrbitClosureData& Y,
                            const Character& beta, bool includes_scaling) {
  auto stability = check_g_stability(rep, Y);
  if (!stability.all_ok) {
    for (auto& e : stability.entries)
      if (!e.ok) {
        std::ostringstream msg;
        msg << "ideal is not g-stable: Z(xi_" << e.basis_index + 1 << ") applied to generator "
            << e.gen_index + 1 << " leaves residual " << e.residual.str();
        throw PreconditionError(msg.str());
      }
  }
  auto e = rep.lie().scaling_element();
  if (includes_scaling && !e)
    throw PreconditionError("includes_scaling requires a flagged scaling element");

  Character beta_prime = rep.beta_prime(beta);
  std::vector<WeylElement> gens;
  for (auto& f : Y.ideal.generators()) gens.push_back(WeylElement::from_poly(f));
  for (int j = 0; j < rep.lie().dim(); ++j) {
    if (!includes_scaling && e && j == *e) continue;
    gens.push_back(rep.vector_field(j) - WeylElement(rep.N(), beta_prime[j]));
  }
  return {WeylIdeal(rep.N(), std::move(gens)), rep, beta, std::move(beta_prime),
          includes_scaling};
}

bool is_nonzero(const TautPresentation& T) { return !T.weyl_ideal.contains_one(); }

NonzeroVerdict is_nonzero_crosschecked(const TautPresentation& T, const BFunction& b0) {
  bool nz = is_nonzero(T);
  bool root = is_root(b0, T.beta.on_e());
  if (nz != root)
    throw InternalDefect(
        "nonvanishing verdicts disagree: Groebner says " + std::string(nz ? "nonzero" : "zero") +
        " but the b-function root test says " + std::string(root ? "nonzero" : "zero"));
  return {nz, nz == root};
}

WeylElement theta_operator(const RepData& rep) {
  auto e = rep.lie().scaling_element();
  if (!e) throw PreconditionError("theta requires a flagged scaling element");
  return WeylElement(rep.N(), Rat(rep.N())) - rep.vector_field(*e);
}

std::vector<Exps> veronese_exponents(int n, int d) {
  std::vector<Exps> out;
  Exps cur(n, 0);
  // descending lexicographic enumeration of degree-d exponents
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == n - 1) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (int k = left; k >= 0; --k) {
      cur[pos] = k;
      rec(pos + 1, left - k);
    }
  };
  rec(0, d);
  return out;
}

RepData veronese_rep(int n, int d) {
  if (n < 1 || d < 1) throw PreconditionError("veronese_rep requires n, d >= 1");
  int m = n * n;
  // gl(n): [E_ij, E_kl] = delta_jk E_il - delta_li E_kj, row-major basis
  std::vector c(m, std::vector(m, std::vector<Rat>(m, Rat(0))));
  auto idx = [n](int i, int j) { return i * n + j; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          auto& row = c[idx(i, j)][idx(k, l)];
          if (j == k) row[idx(i, l)] += 1;
          if (l == i) row[idx(k, j)] -= 1;
        }
  LieAlgebra gl(m, std::move(c));

  auto exps = veronese_exponents(n, d);
  int N = static_cast<int>(exps.size());
  auto multinomial = [&](const Exps& a) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), d);
    for (int t = 0; t < n; ++t) {
      mpz_class f;
      mpz_fac_ui(f.get_mpz_t(), a[t]);
      r /= f;
    }
    return r;
  };
  std::map<Exps, int> pos;
  for (int a = 0; a < N; ++a) pos[exps[a]] = a;

  std::vector<RatMatrix> ms;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      RatMatrix M(N, std::vector<Rat>(N, Rat(0)));
      for (int a = 0; a < N; ++a) {
        const Exps& alpha = exps[a];
        if (alpha[j] == 0) continue;
        Exps beta = alpha;
        beta[j] -= 1;
        beta[i] += 1;
        int b = pos.at(beta);
        M[b][a] = Rat(alpha[j]) * Rat(multinomial(alpha)) / Rat(multinomial(beta));
      }
      ms.push_back(std::move(M));
    }
  return RepData(std::move(gl), N, std::move(ms));
}

PolyIdeal veronese_ideal(int n, int d) {
  auto exps = veronese_exponents(n, d);
  IntMat A(n, std::vector<mpz_class>(exps.size()));
  for (std::size_t c = 0; c < exps.size(); ++c)
    for (int r = 0; r < n; ++r) A[r][c] = exps[c][r];
  return toric_ideal(A);
}

PolyIdeal segre_ideal(int p, int q) {
  if (p < 1 || q < 1) throw PreconditionError("segre_ideal requires p, q >= 1");
  int N = p * q;
  auto at = [q](int i, int j) { return i * q + j; };
  std::vector<Poly> gens;
  for (int i = 0; i < p; ++i)
    for (int k = i + 1; k < p; ++k)
      for (int j = 0; j < q; ++j)
        for (int l = j + 1; l < q; ++l) {
          Poly f = Poly::variable(N, at(i, j)) * Poly::variable(N, at(k, l)) -
                   Poly::variable(N, at(i, l)) * Poly::variable(N, at(k, j));
          gens.push_back(std::move(f));
        }
  return PolyIdeal(N, std::move(gens));
}

}  // namespace taut
