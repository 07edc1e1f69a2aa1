#include "taut/order.hpp"

#include <stdexcept>

namespace taut {

namespace {

int cmp_degrevlex(const Exps& a, const Exps& b, std::size_t lo, std::size_t hi) {
  int64_t da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

int cmp_lex(const Exps& a, const Exps& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  return 0;
}

}  // namespace

int TermOrder::cmp(const Exps& a, const Exps& b) const {
  switch (kind) {
    case Kind::DegRevLex:
      return cmp_degrevlex(a, b, 0, a.size());
    case Kind::DegLex: {
      int64_t da = total_degree(a), db = total_degree(b);
      if (da != db) return da < db ? -1 : 1;
      return cmp_lex(a, b);
    }
    case Kind::Lex:
      return cmp_lex(a, b);
    case Kind::Weighted: {
      if (weights.size() != a.size())
        throw std::invalid_argument("weight vector length mismatch");
      int64_t wa = 0, wb = 0;
      for (std::size_t i = 0; i < a.size(); ++i) {
        wa += weights[i] * a[i];
        wb += weights[i] * b[i];
      }
      if (wa != wb) return wa < wb ? -1 : 1;
      return cmp_degrevlex(a, b, 0, a.size());
    }
    case Kind::Block: {
      std::size_t s = static_cast<std::size_t>(block_split);
      if (int c = cmp_degrevlex(a, b, 0, s)) return c;
      return cmp_degrevlex(a, b, s, a.size());
    }
  }
  return 0;
}

TermOrder TermOrder::parse(const std::string& name) {
  if (name == "degrevlex" || name == "grevlex") return degrevlex();
  if (name == "deglex" || name == "grlex") return deglex();
  if (name == "lex") return lex();
  throw std::invalid_argument("unknown term order: " + name);
}

std::string TermOrder::name() const {
  switch (kind) {
    case Kind::DegRevLex: return "degrevlex";
    case Kind::DegLex: return "deglex";
    case Kind::Lex: return "lex";
    case Kind::Weighted: return "weighted";
    case Kind::Block: return "block";
  }
  return "?";
}

}  // namespace taut
