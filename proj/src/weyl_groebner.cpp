#include "taut/weyl_groebner.hpp"

#include <algorithm>
#include <sstream>

#include "taut/detail/pairs.hpp"
#include "taut/errors.hpp"

namespace taut {

namespace {

void check_order(const TermOrder& ord) {
  if (!ord.degree_compatible())
    throw PreconditionError("Weyl Groebner bases require a total-degree-compatible term order");
}

// left multiplication by a scaled monomial
WeylElement mono_mul(const WeylKey& m, const Rat& c, const WeylElement& g) {
  return weyl_mul(WeylElement::monomial(g.nvars(), m, c), g);
}

bool key_divides(const WeylKey& a, const WeylKey& b) {
  return divides(a.x, b.x) && divides(a.d, b.d);
}

}  // namespace

WeylElement weyl_reduce_full(const WeylElement& p, const std::vector<WeylElement>& G,
                             const TermOrder& ord) {
  WeylElement h = p;
  WeylElement r(p.nvars());
  while (!h.is_zero()) {
    const WeylKey& lk = h.lead_key(ord);
    const Rat lc = h.terms().at(lk);
    bool reduced = false;
    for (const WeylElement& g : G) {
      if (g.is_zero()) continue;
      const WeylKey& gk = g.lead_key(ord);
      if (key_divides(gk, lk)) {
        WeylKey shift{exps_sub(lk.x, gk.x), exps_sub(lk.d, gk.d)};
        h -= mono_mul(shift, lc / g.terms().at(gk), g);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      r.add_term(lk, lc);
      h.add_term(lk, -lc);
    }
  }
  return r;
}

std::vector<WeylElement> weyl_left_buchberger(std::vector<WeylElement> gens,
                                              const TermOrder& ord, long step_budget) {
  check_order(ord);
  std::erase_if(gens, [](const WeylElement& p) { return p.is_zero(); });
  if (gens.empty()) return {};

  std::sort(gens.begin(), gens.end(), [&](const WeylElement& a, const WeylElement& b) {
    int c = ord.cmp(a.lead_key(ord).concat(), b.lead_key(ord).concat());
    if (c != 0) return c < 0;
    return a.str() < b.str();
  });

  std::vector<WeylElement> G;
  std::vector<WeylKey> lks;
  std::vector<Exps> lms;  // concatenated, for the pair logic
  std::vector<gm::Pair> pairs;
  long steps = 0;

  auto add = [&](WeylElement h) {
    h = h * (Rat(1) / h.lead_coeff(ord));
    G.push_back(std::move(h));
    lks.push_back(G.back().lead_key(ord));
    lms.push_back(lks.back().concat());
    gm::update(pairs, lms, static_cast<int>(G.size()) - 1, false);
  };

  for (auto& g : gens) {
    WeylElement h = weyl_reduce_full(g, G, ord);
    if (!h.is_zero()) add(std::move(h));
  }

  while (!pairs.empty()) {
    if (step_budget > 0 && ++steps > step_budget) {
      std::ostringstream msg;
      msg << "left Groebner step budget " << step_budget << " exceeded; partial basis has "
          << G.size() << " elements, " << pairs.size() << " pairs pending";
      throw ResourceError(msg.str());
    }
    std::size_t k = gm::select(pairs, ord);
    gm::Pair pr = pairs[k];
    pairs.erase(pairs.begin() + k);
    const WeylKey &ki = lks[pr.i], &kj = lks[pr.j];
    WeylKey lcm{exps_lcm(ki.x, kj.x), exps_lcm(ki.d, kj.d)};
    WeylElement s =
        mono_mul({exps_sub(lcm.x, ki.x), exps_sub(lcm.d, ki.d)}, 1, G[pr.i]) -
        mono_mul({exps_sub(lcm.x, kj.x), exps_sub(lcm.d, kj.d)}, 1, G[pr.j]);
    WeylElement h = weyl_reduce_full(s, G, ord);
    if (!h.is_zero()) add(std::move(h));
  }

  std::vector<WeylElement> min;
  for (std::size_t a = 0; a < G.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < G.size() && !redundant; ++b) {
      if (a == b) continue;
      if (key_divides(lks[b], lks[a]) && (lks[b] != lks[a] || b < a)) redundant = true;
    }
    if (!redundant) min.push_back(G[a]);
  }

  std::vector<WeylElement> out;
  for (std::size_t a = 0; a < min.size(); ++a) {
    std::vector<WeylElement> others;
    for (std::size_t b = 0; b < min.size(); ++b)
      if (b != a) others.push_back(min[b]);
    WeylElement r = weyl_reduce_full(min[a], others, ord);
    out.push_back(r * (Rat(1) / r.lead_coeff(ord)));
  }
  std::sort(out.begin(), out.end(), [&](const WeylElement& a, const WeylElement& b) {
    return ord.cmp(a.lead_key(ord).concat(), b.lead_key(ord).concat()) < 0;
  });
  return out;
}

WeylIdeal::WeylIdeal(int nvars, std::vector<WeylElement> generators)
    : nvars_(nvars), gens_(std::move(generators)) {
  std::erase_if(gens_, [](const WeylElement& p) { return p.is_zero(); });
  for (auto& g : gens_)
    if (g.nvars() != nvars_)
      throw ValidationError("Weyl ideal generator has wrong ambient dimension");
}

const std::vector<WeylElement>& WeylIdeal::groebner(const TermOrder& ord) const {
  check_order(ord);
  if (!gb_ || !(order_ == ord)) {
    gb_ = weyl_left_buchberger(gens_, ord);
    order_ = ord;
  }
  return *gb_;
}

bool WeylIdeal::contains_one(const TermOrder& ord) const {
  for (auto& g : groebner(ord))
    if (!g.is_zero() && g.lead_key(ord).bernstein_degree() == 0) return true;
  return false;
}

WeylElement weyl_normal_form(const WeylElement& p, const WeylIdeal& J,
                             const TermOrder& ord) {
  return weyl_reduce_full(p, J.groebner(ord), ord);
}

WeylElement weyl_normal_form(const WeylElement& p, const WeylIdeal& J) {
  if (J.nvars() != p.nvars())
    throw ValidationError("weyl_normal_form: ambient dimension mismatch");
  return weyl_normal_form(p, J, TermOrder::degrevlex());
}

}  // namespace taut
