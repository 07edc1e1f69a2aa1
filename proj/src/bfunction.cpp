#include "taut/bfunction.hpp"

#include <map>
#include <sstream>

#include "taut/errors.hpp"
#include "taut/ratmat.hpp"

namespace taut {

Rat BFunction::eval(const Rat& v) const {
  Rat acc = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * v + coeffs[i];
  return acc;
}

std::vector<Rat> BFunction::rational_roots() const {
  // candidates p/q with p | coeffs[0]*lcm and q | lead; b is monic over Q, so
  // clear denominators first
  mpz_class den = 1;
  for (auto& c : coeffs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<mpz_class> z;
  for (auto& c : coeffs) z.push_back(c.get_num() * (den / c.get_den()));
  // strip trailing zero coefficients: roots at 0
  std::vector<Rat> roots;
  std::size_t k = 0;
  while (k < z.size() && z[k] == 0) ++k;
  if (k > 0) roots.push_back(Rat(0));
  if (k >= z.size() - 1) return roots;
  mpz_class a0 = abs(z[k]), lead = abs(z.back());
  auto divisors = [](const mpz_class& n) {
    std::vector<mpz_class> ds;
    for (mpz_class d = 1; d * d <= n; ++d)
      if (n % d == 0) {
        ds.push_back(d);
        if (d * d != n) ds.push_back(n / d);
      }
    return ds;
  };
  for (auto& p : divisors(a0))
    for (auto& q : divisors(lead))
      for (int sign : {1, -1}) {
        Rat cand(sign * p, q);
        cand.canonicalize();
        if (eval(cand) == 0) {
          bool seen = false;
          for (auto& r : roots) seen = seen || r == cand;
          if (!seen) roots.push_back(cand);
        }
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::string BFunction::str() const {
  Poly p(1);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    p.add_term(Exps{static_cast<int32_t>(i)}, coeffs[i]);
  auto s = p.str("s");
  // cosmetic: print the variable without an index ("s^2 - s", not "s1^2 - s1")
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == 's' && i + 1 < s.size() && s[i + 1] == '1') {
      out += 's';
      ++i;
    } else {
      out += s[i];
    }
  }
  return out;
}

bool is_root(const BFunction& b, const Rat& v) { return b.eval(v) == 0; }

bool is_simple_root(const BFunction& b, const Rat& v) {
  if (b.eval(v) != 0) return false;
  Rat acc = 0;  // derivative via Horner
  for (std::size_t i = b.coeffs.size(); i-- > 1;)
    acc = acc * v + b.coeffs[i] * static_cast<long>(i);
  return acc != 0;
}

BFunction reflect(const BFunction& b, const Rat& shift) {
  // expand b(shift - s) and normalize monic
  std::vector<Rat> out(b.coeffs.size(), Rat(0));
  std::vector<Rat> pw = {Rat(1)};  // (shift - s)^i coefficients
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) {
    for (std::size_t j = 0; j < pw.size(); ++j) out[j] += b.coeffs[i] * pw[j];
    // multiply pw by (shift - s)
    std::vector<Rat> next(pw.size() + 1, Rat(0));
    for (std::size_t j = 0; j < pw.size(); ++j) {
      next[j] += pw[j] * shift;
      next[j + 1] -= pw[j];
    }
    pw = std::move(next);
  }
  Rat lead = out.back();
  for (auto& c : out) c /= lead;
  return BFunction{std::move(out), b.theta};
}

BFunctionOutcome minimal_polynomial_of_theta(const WeylIdeal& J0,
                                             const WeylElement& theta, int cap,
                                             const TermOrder& ord) {
  if (cap < 1) throw PreconditionError("degree cap must be at least 1");
  const auto& gb = J0.groebner(ord);
  if (J0.contains_one(ord))
    return {BFunctionOutcome::Status::ZeroModule, std::nullopt, {}};

  // theta must act on the cyclic module by right multiplication: every basis
  // element pushed across theta has to land back in the ideal
  for (auto& g : gb)
    if (!weyl_reduce_full(weyl_mul(g, theta), gb, ord).is_zero())
      throw PreconditionError(
          "theta does not normalize the ideal; right multiplication is ill-defined");

  std::vector<WeylElement> residues;
  residues.push_back(weyl_reduce_full(WeylElement(theta.nvars(), Rat(1)), gb, ord));

  for (int k = 1; k <= cap; ++k) {
    residues.push_back(weyl_reduce_full(weyl_mul(residues.back(), theta), gb, ord));

    // exact dependency search: c_0 r_0 + ... + c_{k-1} r_{k-1} = -r_k
    std::map<WeylKey, std::size_t> support;
    for (auto& r : residues)
      for (auto& [key, c] : r.terms())
        support.emplace(key, support.size());
    std::vector<std::vector<Rat>> A(support.size(), std::vector<Rat>(k, Rat(0)));
    std::vector<Rat> rhs(support.size(), Rat(0));
    for (int i = 0; i < k; ++i)
      for (auto& [key, c] : residues[i].terms()) A[support[key]][i] = c;
    for (auto& [key, c] : residues[k].terms()) rhs[support[key]] = -c;

    if (auto sol = solve_dense(std::move(A), std::move(rhs))) {
      std::vector<Rat> coeffs = *sol;
      coeffs.push_back(Rat(1));
      BFunction b{std::move(coeffs), theta};

      // certificate, always run: b(theta) itself reduces to zero
      WeylElement bt(theta.nvars(), b.coeffs[0]);
      WeylElement pw(theta.nvars(), Rat(1));
      for (int i = 1; i <= k; ++i) {
        pw = weyl_mul(pw, theta);
        bt += pw * b.coeffs[i];
      }
      if (!weyl_reduce_full(bt, gb, ord).is_zero())
        throw InternalDefect("b-function certificate failed: b(theta) not in the ideal");

      return {BFunctionOutcome::Status::Found, std::move(b), std::move(residues)};
    }
  }
  return {BFunctionOutcome::Status::CapExhausted, std::nullopt, std::move(residues)};
}

}  // namespace taut
