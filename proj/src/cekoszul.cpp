#include "taut/cekoszul.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "taut/errors.hpp"

namespace taut {

void Cochain::add(std::vector<int> wedge, const WeylElement& coeff) {
  if (coeff.is_zero()) return;
  // insertion sort with sign bookkeeping; repeated indices kill the term
  int sign = 1;
  for (std::size_t i = 1; i < wedge.size(); ++i) {
    int v = wedge[i];
    std::size_t j = i;
    while (j > 0 && wedge[j - 1] > v) {
      wedge[j] = wedge[j - 1];
      sign = -sign;
      --j;
    }
    wedge[j] = v;
  }
  for (std::size_t i = 1; i < wedge.size(); ++i)
    if (wedge[i] == wedge[i - 1]) return;

  auto it = terms.find(wedge);
  if (it == terms.end()) {
    WeylElement w = sign > 0 ? coeff : -coeff;
    terms.emplace(std::move(wedge), std::move(w));
  } else {
    if (sign > 0)
      it->second += coeff;
    else
      it->second -= coeff;
    if (it->second.is_zero()) terms.erase(it);
  }
}

std::string Cochain::str() const {
  if (terms.empty()) return "[] 0";
  std::ostringstream out;
  bool first = true;
  for (auto& [w, c] : terms) {
    if (!first) out << "\n";
    first = false;
    out << "[";
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) out << "^";
      out << w[i] + 1;
    }
    out << "] " << c.str();
  }
  return out.str();
}

Cochain parse_cochain(const std::string& text, int nvars) {
  Cochain c;
  c.ell = -1;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    std::size_t e = line.find(']');
    if (line[b] != '[' || e == std::string::npos)
      throw ValidationError("cochain line must start with a [i1^i2^...] wedge: " + line);
    std::string wedge_text = line.substr(b + 1, e - b - 1);
    std::vector<int> wedge;
    std::istringstream ws(wedge_text);
    std::string tok;
    while (std::getline(ws, tok, '^')) {
      if (tok.empty()) continue;
      wedge.push_back(std::stoi(tok) - 1);
      if (wedge.back() < 0) throw ValidationError("wedge indices are 1-based: " + line);
    }
    if (c.ell < 0)
      c.ell = static_cast<int>(wedge.size());
    else if (static_cast<int>(wedge.size()) != c.ell)
      throw ValidationError("cochain lines have inconsistent wedge degrees");
    WeylElement coeff = parse_weyl(line.substr(e + 1), nvars);
    c.add(std::move(wedge), coeff);
  }
  if (c.ell < 0) throw ValidationError("empty cochain text");
  return c;
}

CEComplex::CEComplex(RepData rep, OrbitClosureData Y, Character twist)
    : rep_(std::move(rep)), Y_(std::move(Y)), twist_(std::move(twist)) {
  if (rep_.N() != Y_.ideal.nvars())
    throw ValidationError("representation and ideal live on different spaces");
  if (twist_.dim() != rep_.lie().dim())
    throw ValidationError("twist character has wrong dimension");
  for (int j = 0; j < rep_.lie().dim(); ++j) fields_.push_back(rep_.vector_field(j));
  Y_.ideal.groebner(TermOrder::degrevlex());  // warm the cache; reductions are const after
}

CEComplex CEComplex::for_beta(const RepData& rep, OrbitClosureData Y, const Character& beta) {
  Character twist = rep.beta_prime(beta);
  return CEComplex(rep, std::move(Y), std::move(twist));
}

WeylElement CEComplex::reduce_coefficient(const WeylElement& P) const {
  const auto& gb = Y_.ideal.groebner(TermOrder::degrevlex());
  if (gb.empty()) return P;
  TermOrder ord = TermOrder::degrevlex();
  WeylElement h = P;
  while (true) {
    // largest term whose x-part is non-standard
    const WeylKey* key = nullptr;
    const Poly* red = nullptr;
    Exps cat;
    for (auto& [k, c] : h.terms()) {
      for (auto& g : gb) {
        if (!divides(g.lead_monomial(ord), k.x)) continue;
        Exps kcat = k.concat();
        if (!key || ord.cmp(kcat, cat) > 0) {
          key = &k;
          red = &g;
          cat = std::move(kcat);
        }
        break;
      }
    }
    if (!key) return h;
    const Exps& glm = red->lead_monomial(ord);
    WeylKey shift{exps_sub(key->x, glm), key->d};
    Rat c = h.terms().at(*key) / red->terms().at(glm);
    h -= weyl_mul(WeylElement::monomial(h.nvars(), shift, c),
                  WeylElement::from_poly(*red));
  }
}

WeylElement CEComplex::right_action(const WeylElement& P, int j) const {
  WeylElement moved = weyl_mul(P, fields_[j]) - P * twist_[j];
  return reduce_coefficient(moved);
}

Cochain CEComplex::differential(const Cochain& c) const {
  if (c.ell < 1) throw PreconditionError("differential needs wedge degree >= 1");
  Cochain out;
  out.ell = c.ell - 1;
  for (auto& [w, P] : c.terms) {
    // (-1)^(i+1) (P . xi_i) (x) remaining wedge, 1-based i
    for (std::size_t i = 0; i < w.size(); ++i) {
      WeylElement acted = right_action(P, w[i]);
      if (acted.is_zero()) continue;
      if (i % 2 == 1) acted = -acted;
      std::vector<int> rest;
      rest.reserve(w.size() - 1);
      for (std::size_t t = 0; t < w.size(); ++t)
        if (t != i) rest.push_back(w[t]);
      out.add(std::move(rest), acted);
    }
    // (-1)^(i+j) P (x) [xi_i, xi_j] ^ remaining wedge
    for (std::size_t i = 0; i < w.size(); ++i) {
      for (std::size_t j = i + 1; j < w.size(); ++j) {
        const auto& br = rep_.lie().bracket(w[i], w[j]);
        int sign = ((i + j) % 2 == 0) ? 1 : -1;
        for (int k = 0; k < rep_.lie().dim(); ++k) {
          if (br[k] == 0) continue;
          std::vector<int> wedge;
          wedge.reserve(w.size() - 1);
          wedge.push_back(k);
          for (std::size_t t = 0; t < w.size(); ++t)
            if (t != i && t != j) wedge.push_back(w[t]);
          out.add(std::move(wedge), P * (br[k] * sign));
        }
      }
    }
  }
  return out;
}

CEComplex::CycleResult CEComplex::cycle_check(const Cochain& c) const {
  Cochain d = differential(c);
  return {d.is_zero(), std::move(d)};
}

WeylIdeal CEComplex::h0_presentation() const {
  std::vector<WeylElement> gens;
  for (auto& f : Y_.ideal.generators()) gens.push_back(WeylElement::from_poly(f));
  for (int j = 0; j < rep_.lie().dim(); ++j)
    gens.push_back(right_action(WeylElement(rep_.N(), Rat(1)), j));
  WeylIdeal H(rep_.N(), std::move(gens));

  // must present the same ideal as the direct cyclic construction
  Character beta = rep_.trace_drho() - twist_;
  auto T = build_taut(rep_, Y_, beta, rep_.lie().scaling_element().has_value());
  for (auto& g : H.generators())
    if (!weyl_normal_form(g, T.weyl_ideal).is_zero())
      throw InternalDefect("H^0 presentation disagrees with the cyclic one (extra element)");
  for (auto& g : T.weyl_ideal.generators())
    if (!weyl_normal_form(g, H).is_zero())
      throw InternalDefect("H^0 presentation disagrees with the cyclic one (missing element)");
  return H;
}

namespace {

// exponent vectors of fixed total degree, optionally filtered to standard
// monomials mod the leading terms
void enumerate_exps(int nvars, int degree, const std::function<void(const Exps&)>& emit) {
  Exps cur(nvars, 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == nvars - 1) {
      cur[pos] = left;
      emit(cur);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      cur[pos] = k;
      rec(pos + 1, left - k);
    }
  };
  if (nvars == 0) return;
  rec(0, degree);
}

}  // namespace

HomologyProfile CEComplex::truncated_homology_profile(int weight, int bernstein_cap,
                                                      std::size_t max_slice) const {
  if (bernstein_cap < 0) throw PreconditionError("bernstein cap must be >= 0");
  if (!Y_.is_homogeneous())
    throw PreconditionError("weight slices need a homogeneous ideal");

  const int N = rep_.N();
  const int m = rep_.lie().dim();
  TermOrder ord = TermOrder::degrevlex();
  const auto& gb = Y_.ideal.groebner(ord);

  auto standard = [&](const Exps& a) {
    for (auto& g : gb)
      if (divides(g.lead_monomial(ord), a)) return false;
    return true;
  };

  // slice keys by Bernstein degree <= cap and <= cap+2 (differential target)
  std::map<WeylKey, int> slice, target;
  std::vector<bool> target_above_cap;
  for (int s = std::abs(weight); s <= bernstein_cap + 2; s += 2) {
    int xdeg = (s + weight) / 2, ddeg = (s - weight) / 2;
    if (xdeg < 0 || ddeg < 0) continue;
    enumerate_exps(N, xdeg, [&](const Exps& a) {
      if (!standard(a)) return;
      enumerate_exps(N, ddeg, [&](const Exps& b) {
        WeylKey k{a, b};
        int id = static_cast<int>(target.size());
        target.emplace(k, id);
        target_above_cap.push_back(s > bernstein_cap);
        if (s <= bernstein_cap) slice.emplace(k, static_cast<int>(slice.size()));
      });
    });
  }

  // wedge bases per degree
  std::vector<std::vector<std::vector<int>>> wedges(m + 1);
  {
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
      wedges[cur.size()].push_back(cur);
      for (int v = start; v < m; ++v) {
        cur.push_back(v);
        rec(v + 1);
        cur.pop_back();
      }
    };
    rec(0);
  }

  auto slice_dim = [&](int ell) { return wedges[ell].size() * slice.size(); };
  for (int ell = 0; ell <= m; ++ell)
    if (slice_dim(ell) > max_slice) {
      std::ostringstream msg;
      msg << "truncated slice at wedge degree " << ell << " has dimension " << slice_dim(ell)
          << ", above the limit " << max_slice;
      throw ResourceError(msg.str());
    }

  // assemble one differential matrix per wedge degree (independent, so the
  // loop is parallel); rows live in the cap+2 target slice
  std::vector<SparseRatMat> mats(m + 1), mats_above(m + 1);
  std::vector<std::string> assembly_errors(m + 1);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int ell = 1; ell <= m; ++ell) {
    try {
      int cols = static_cast<int>(wedges[ell].size() * slice.size());
      int rows = static_cast<int>(wedges[ell - 1].size() * target.size());
      SparseRatMat M(rows, cols), Mhigh(rows, cols);
      std::map<std::vector<int>, int> wedge_pos;
      for (std::size_t t = 0; t < wedges[ell - 1].size(); ++t)
        wedge_pos[wedges[ell - 1][t]] = static_cast<int>(t);

      for (std::size_t wi = 0; wi < wedges[ell].size(); ++wi) {
        for (auto& [key, kid] : slice) {
          int col = static_cast<int>(wi * slice.size()) + kid;
          Cochain basis;
          basis.ell = ell;
          basis.add(wedges[ell][wi], WeylElement::monomial(N, key, 1));
          Cochain img = differential(basis);
          for (auto& [w2, coeff] : img.terms) {
            int wrow = wedge_pos.at(w2);
            for (auto& [k2, c2] : coeff.terms()) {
              auto it = target.find(k2);
              if (it == target.end())
                throw InternalDefect("differential left the cap+2 target slice");
              int row = wrow * static_cast<int>(target.size()) + it->second;
              M.add(row, col, c2);
              if (target_above_cap[it->second]) Mhigh.add(row, col, c2);
            }
          }
        }
      }
      mats[ell] = std::move(M);
      mats_above[ell] = std::move(Mhigh);
    } catch (const std::exception& e) {
      assembly_errors[ell] = e.what();
    }
  }
  for (auto& e : assembly_errors)
    if (!e.empty()) throw InternalDefect(e);

  std::vector<int> rank(m + 2, 0), rank_above(m + 2, 0);
  for (int ell = 1; ell <= m; ++ell) {
    rank[ell] = mats[ell].rank();
    rank_above[ell] = mats_above[ell].rank();
  }

  HomologyProfile profile;
  profile.weight = weight;
  profile.cap = bernstein_cap;
  for (int ell = 0; ell <= m; ++ell) {
    HomologyProfile::Row row;
    row.ell = ell;
    row.dim = slice_dim(ell);
    row.rank = ell >= 1 ? rank[ell] : 0;
    int incoming = (ell + 1 <= m) ? rank[ell + 1] - rank_above[ell + 1] : 0;
    row.boundaries_in_slice = incoming;
    row.apparent_homology = static_cast<long>(row.dim) - row.rank - incoming;
    profile.rows.push_back(row);
  }
  return profile;
}

Cochain veronese_zeta(int n, int d, const CEComplex& C) {
  if (n < 1 || d < 1) throw PreconditionError("veronese_zeta requires n, d >= 1");
  if (n % d != 0) throw PreconditionError("veronese_zeta requires d | n");
  auto exps = veronese_exponents(n, d);
  if (C.rep().N() != static_cast<int>(exps.size()) || C.wedge_rank() != n * n)
    throw PreconditionError("complex does not match the requested Veronese data");
  int N = C.rep().N();
  std::map<Exps, int> pos;
  for (std::size_t i = 0; i < exps.size(); ++i) pos[exps[i]] = static_cast<int>(i);

  Cochain zeta;
  zeta.ell = n * n - n;

  std::vector<int> a(n, 0);  // values 0..n-1 for a_i - 1
  while (true) {
    // sign (-1)^(sum a_i) with 1-based entries
    long asum = n;  // the +1 per entry
    for (int v : a) asum += v;
    int sign = (asum % 2 == 0) ? 1 : -1;

    // x_{a_1} ... x_{a_n} rewritten in the degree-d coordinates: split the
    // exponent vector greedily into n/d chunks of degree d
    Exps cexp(n, 0);
    for (int v : a) cexp[v] += 1;
    Exps mono(N, 0);
    int var = 0;
    for (int chunk = 0; chunk < n / d; ++chunk) {
      Exps part(n, 0);
      int left = d;
      while (left > 0) {
        while (cexp[var] == 0) ++var;
        int take = std::min(cexp[var], left);
        part[var] += take;
        cexp[var] -= take;
        left -= take;
      }
      mono[pos.at(part)] += 1;
    }

    // complement of { E_{i, a_i} } in the row-major full wedge
    std::vector<bool> removed(n * n, false);
    for (int i = 0; i < n; ++i) removed[i * n + a[i]] = true;
    std::vector<int> wedge;
    wedge.reserve(n * n - n);
    for (int g = 0; g < n * n; ++g)
      if (!removed[g]) wedge.push_back(g);

    WeylElement coeff = C.reduce_coefficient(
        WeylElement::from_poly(Poly::monomial(N, mono, Rat(sign))));
    zeta.add(std::move(wedge), coeff);

    int i = 0;
    while (i < n && a[i] == n - 1) {
      a[i] = 0;
      ++i;
    }
    if (i == n) break;
    ++a[i];
  }
  return zeta;
}

}  // namespace taut
