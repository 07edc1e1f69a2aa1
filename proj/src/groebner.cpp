#include "taut/groebner.hpp"

#include <algorithm>
#include <sstream>

#include "taut/detail/pairs.hpp"
#include "taut/errors.hpp"

namespace taut {

namespace {

Poly mono_mul(const Poly& p, const Exps& shift, const Rat& scale) {
  Poly r(p.nvars());
  for (auto& [e, c] : p.terms()) r.add_term(exps_add(e, shift), c * scale);
  return r;
}

bool coprime(const Exps& a, const Exps& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

}  // namespace

Poly reduce_full(const Poly& p, const std::vector<Poly>& G, const TermOrder& ord) {
  Poly h = p;
  Poly r(p.nvars());
  while (!h.is_zero()) {
    const Exps& lm = h.lead_monomial(ord);
    const Rat lc = h.terms().at(lm);
    bool reduced = false;
    for (const Poly& g : G) {
      if (g.is_zero()) continue;
      const Exps& glm = g.lead_monomial(ord);
      if (divides(glm, lm)) {
        h -= mono_mul(g, exps_sub(lm, glm), lc / g.terms().at(glm));
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      r.add_term(lm, lc);
      h.add_term(lm, -lc);
    }
  }
  return r;
}

namespace gm {

void update(std::vector<Pair>& pairs, const std::vector<Exps>& lms, int t,
            bool use_product_criterion) {
  const Exps& lt = lms[t];
  std::vector<Exps> lcm(t);
  for (int i = 0; i < t; ++i) lcm[i] = exps_lcm(lms[i], lt);

  // sieve the new pairs (i,t):
  //   M: drop when another new pair's lcm strictly divides this one's
  //   F: of an equal-lcm class keep only the first survivor
  std::vector<bool> keep(t, true);
  for (int a = 0; a < t; ++a) {
    for (int b = 0; b < t && keep[a]; ++b) {
      if (a == b) continue;
      if (!divides(lcm[b], lcm[a])) continue;
      if (lcm[b] != lcm[a] || (b < a && keep[b])) keep[a] = false;
    }
  }

  // B: old pair (i,j) is redundant once lt properly divides its lcm
  std::erase_if(pairs, [&](const Pair& pr) {
    return divides(lt, pr.lcm) && exps_lcm(lms[pr.i], lt) != pr.lcm &&
           exps_lcm(lms[pr.j], lt) != pr.lcm;
  });

  for (int i = 0; i < t; ++i) {
    if (!keep[i]) continue;
    // product criterion; only valid in the commutative ring
    if (use_product_criterion && coprime(lms[i], lt)) continue;
    pairs.push_back({i, t, lcm[i], total_degree(lcm[i])});
  }
}

std::size_t select(const std::vector<Pair>& pairs, const TermOrder& ord) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < pairs.size(); ++k) {
    const auto &a = pairs[k], &b = pairs[best];
    if (a.deg != b.deg) {
      if (a.deg < b.deg) best = k;
      continue;
    }
    int c = ord.cmp(a.lcm, b.lcm);
    if (c < 0 || (c == 0 && std::tie(a.j, a.i) < std::tie(b.j, b.i))) best = k;
  }
  return best;
}

}  // namespace gm

std::vector<Poly> buchberger(std::vector<Poly> gens, const TermOrder& ord,
                             long step_budget) {
  std::erase_if(gens, [](const Poly& p) { return p.is_zero(); });
  if (gens.empty()) return {};

  // deterministic seeding regardless of the caller's generator order
  std::sort(gens.begin(), gens.end(), [&](const Poly& a, const Poly& b) {
    int c = ord.cmp(a.lead_monomial(ord), b.lead_monomial(ord));
    if (c != 0) return c < 0;
    return a.str() < b.str();
  });

  std::vector<Poly> G;
  std::vector<Exps> lms;
  std::vector<gm::Pair> pairs;
  long steps = 0;

  auto add = [&](Poly h) {
    h = h * (Rat(1) / h.lead_coeff(ord));
    G.push_back(std::move(h));
    lms.push_back(G.back().lead_monomial(ord));
    gm::update(pairs, lms, static_cast<int>(G.size()) - 1, true);
  };

  for (auto& g : gens) {
    Poly h = reduce_full(g, G, ord);
    if (!h.is_zero()) add(std::move(h));
  }

  while (!pairs.empty()) {
    if (step_budget > 0 && ++steps > step_budget) {
      std::ostringstream msg;
      msg << "Groebner step budget " << step_budget << " exceeded; partial basis has "
          << G.size() << " elements, " << pairs.size() << " pairs pending";
      throw ResourceError(msg.str());
    }
    std::size_t k = gm::select(pairs, ord);
    gm::Pair pr = pairs[k];
    pairs.erase(pairs.begin() + k);
    const Poly &f = G[pr.i], &g = G[pr.j];
    Poly s = mono_mul(f, exps_sub(pr.lcm, lms[pr.i]), 1) -
             mono_mul(g, exps_sub(pr.lcm, lms[pr.j]), 1);
    Poly h = reduce_full(s, G, ord);
    if (!h.is_zero()) add(std::move(h));
  }

  // minimalize: drop elements whose lead is divisible by another lead
  std::vector<Poly> min;
  for (std::size_t a = 0; a < G.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < G.size() && !redundant; ++b) {
      if (a == b) continue;
      if (divides(lms[b], lms[a]) && (lms[b] != lms[a] || b < a)) redundant = true;
    }
    if (!redundant) min.push_back(G[a]);
  }

  // tail-reduce to the unique reduced basis
  std::vector<Poly> out;
  for (std::size_t a = 0; a < min.size(); ++a) {
    std::vector<Poly> others;
    for (std::size_t b = 0; b < min.size(); ++b)
      if (b != a) others.push_back(min[b]);
    Poly r = reduce_full(min[a], others, ord);
    out.push_back(r * (Rat(1) / r.lead_coeff(ord)));
  }
  std::sort(out.begin(), out.end(), [&](const Poly& a, const Poly& b) {
    return ord.cmp(a.lead_monomial(ord), b.lead_monomial(ord)) < 0;
  });
  return out;
}

PolyIdeal::PolyIdeal(int nvars, std::vector<Poly> generators)
    : nvars_(nvars), gens_(std::move(generators)) {
  std::erase_if(gens_, [](const Poly& p) { return p.is_zero(); });
  for (auto& g : gens_)
    if (g.nvars() != nvars_) throw ValidationError("ideal generator has wrong ambient dimension");
}

const std::vector<Poly>& PolyIdeal::groebner(const TermOrder& ord) const {
  if (!gb_ || !(order_ == ord)) {
    gb_ = buchberger(gens_, ord);
    order_ = ord;
  }
  return *gb_;
}

Poly normal_form(const Poly& p, const PolyIdeal& I, const TermOrder& ord) {
  return reduce_full(p, I.groebner(ord), ord);
}

Poly normal_form(const Poly& p, const PolyIdeal& I) {
  if (I.nvars() != p.nvars())
    throw ValidationError("normal_form: ambient dimension mismatch");
  return normal_form(p, I, TermOrder::degrevlex());
}

bool contains_one(const std::vector<Poly>& gb) {
  for (auto& g : gb)
    if (!g.is_zero() && total_degree(g.lead_monomial(TermOrder::degrevlex())) == 0)
      return true;
  return false;
}

}  // namespace taut
