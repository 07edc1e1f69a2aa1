#include "taut/weyl.hpp"

#include <algorithm>
#include <sstream>

#include "taut/detail/parse.hpp"
#include "taut/errors.hpp"

namespace taut {

WeylElement::WeylElement(int nvars, const Rat& c) : nvars_(nvars) {
  if (c != 0) terms_[{Exps(nvars, 0), Exps(nvars, 0)}] = c;
}

WeylElement WeylElement::from_poly(const Poly& p) {
  WeylElement w(p.nvars());
  Exps zero(p.nvars(), 0);
  for (auto& [e, c] : p.terms()) w.terms_[{e, zero}] = c;
  return w;
}

WeylElement WeylElement::x(int nvars, int i, int power) {
  WeylKey k{Exps(nvars, 0), Exps(nvars, 0)};
  k.x[i] = power;
  return monomial(nvars, std::move(k), 1);
}

WeylElement WeylElement::d(int nvars, int i, int power) {
  WeylKey k{Exps(nvars, 0), Exps(nvars, 0)};
  k.d[i] = power;
  return monomial(nvars, std::move(k), 1);
}

WeylElement WeylElement::monomial(int nvars, WeylKey k, Rat c) {
  WeylElement w(nvars);
  if (c != 0) w.terms_[std::move(k)] = std::move(c);
  return w;
}

int64_t WeylElement::bernstein_degree() const {
  int64_t d = -1;
  for (auto& [k, c] : terms_) d = std::max(d, k.bernstein_degree());
  return d;
}

bool WeylElement::is_weight_homogeneous() const {
  if (terms_.empty()) return true;
  int64_t w = terms_.begin()->first.weight();
  for (auto& [k, c] : terms_)
    if (k.weight() != w) return false;
  return true;
}

bool WeylElement::is_polynomial() const {
  for (auto& [k, c] : terms_)
    if (total_degree(k.d) != 0) return false;
  return true;
}

Poly WeylElement::x_part_as_poly() const {
  if (!is_polynomial())
    throw PreconditionError("Weyl element is not purely polynomial");
  Poly p(nvars_);
  for (auto& [k, c] : terms_) p.add_term(k.x, c);
  return p;
}

void WeylElement::add_term(const WeylKey& k, const Rat& c) {
  if (c == 0) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

WeylElement& WeylElement::operator+=(const WeylElement& o) {
  if (nvars_ != o.nvars_) throw ValidationError("Weyl ambient dimension mismatch");
  for (auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

WeylElement& WeylElement::operator-=(const WeylElement& o) {
  if (nvars_ != o.nvars_) throw ValidationError("Weyl ambient dimension mismatch");
  for (auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

WeylElement WeylElement::operator-() const {
  WeylElement r(nvars_);
  for (auto& [k, c] : terms_) r.terms_[k] = -c;
  return r;
}

WeylElement WeylElement::operator*(const Rat& c) const {
  WeylElement r(nvars_);
  if (c == 0) return r;
  for (auto& [k, t] : terms_) r.terms_[k] = t * c;
  return r;
}

const WeylKey& WeylElement::lead_key(const TermOrder& ord) const {
  if (terms_.empty()) throw std::logic_error("lead_key of zero element");
  auto best = terms_.begin();
  Exps bestcat = best->first.concat();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it) {
    Exps cat = it->first.concat();
    if (ord.cmp(cat, bestcat) > 0) {
      best = it;
      bestcat = std::move(cat);
    }
  }
  return best->first;
}

const Rat& WeylElement::lead_coeff(const TermOrder& ord) const {
  return terms_.at(lead_key(ord));
}

WeylElement weyl_mul(const WeylElement& a, const WeylElement& b) {
  if (a.nvars() != b.nvars()) throw ValidationError("Weyl ambient dimension mismatch");
  const int n = a.nvars();
  WeylElement r(n);
  for (auto& [ka, ca] : a.terms()) {
    for (auto& [kb, cb] : b.terms()) {
      // d^b x^c = sum_k  C(b,k) C(c,k) k!  x^(c-k) d^(b-k), componentwise
      Exps kmax(n);
      for (int i = 0; i < n; ++i) kmax[i] = std::min(ka.d[i], kb.x[i]);
      Exps k(n, 0);
      while (true) {
        mpz_class coef = 1;
        for (int i = 0; i < n; ++i) {
          if (k[i] == 0) continue;
          mpz_class t;
          mpz_bin_uiui(t.get_mpz_t(), ka.d[i], k[i]);
          coef *= t;
          mpz_bin_uiui(t.get_mpz_t(), kb.x[i], k[i]);
          coef *= t;
          mpz_fac_ui(t.get_mpz_t(), k[i]);
          coef *= t;
        }
        WeylKey key{Exps(n), Exps(n)};
        for (int i = 0; i < n; ++i) {
          key.x[i] = ka.x[i] + kb.x[i] - k[i];
          key.d[i] = ka.d[i] + kb.d[i] - k[i];
        }
        r.add_term(key, ca * cb * Rat(coef));
        // next multi-index k <= kmax
        int i = 0;
        while (i < n && k[i] == kmax[i]) {
          k[i] = 0;
          ++i;
        }
        if (i == n) break;
        ++k[i];
      }
    }
  }
  return r;
}

WeylElement weyl_commutator(const WeylElement& a, const WeylElement& b) {
  return weyl_mul(a, b) - weyl_mul(b, a);
}

std::string WeylElement::str() const {
  if (terms_.empty()) return "0";
  std::vector<const WeylKey*> keys;
  keys.reserve(terms_.size());
  for (auto& [k, c] : terms_) keys.push_back(&k);
  TermOrder ord = TermOrder::deglex();
  std::sort(keys.begin(), keys.end(), [&](const WeylKey* a, const WeylKey* b) {
    return ord.cmp(a->concat(), b->concat()) > 0;
  });

  std::ostringstream out;
  bool first = true;
  for (auto* k : keys) {
    const Rat& c = terms_.at(*k);
    Rat a = abs(c);
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    bool has_vars = k->bernstein_degree() > 0;
    if (a != 1 || !has_vars) {
      out << rat_str(a);
      if (has_vars) out << " ";
    }
    bool firstv = true;
    auto emit = [&](const Exps& e, char pref) {
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!firstv) out << " ";
        firstv = false;
        out << pref << (i + 1);
        if (e[i] > 1) out << "^" << e[i];
      }
    };
    emit(k->x, 'x');
    emit(k->d, 'd');
  }
  return out.str();
}

WeylElement parse_weyl(std::string_view s, int nvars) {
  WeylElement w(nvars);
  parse_terms(s, nvars, "xd", [&](const Rat& c, const std::vector<Exps>& e) {
    w.add_term({e[0], e[1]}, c);
  });
  return w;
}

}  // namespace taut
