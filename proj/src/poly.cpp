#include "taut/poly.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "taut/detail/parse.hpp"

namespace taut {

namespace {
void require_same_nvars(int a, int b) {
  if (a != b) throw std::invalid_argument("ambient variable count mismatch");
}
}  // namespace

Poly::Poly(int nvars, const Rat& c) : nvars_(nvars) {
  if (c != 0) terms_[Exps(nvars, 0)] = c;
}

Poly Poly::variable(int nvars, int i, int power) {
  if (i < 0 || i >= nvars) throw std::invalid_argument("variable index out of range");
  Exps e(nvars, 0);
  e[i] = power;
  Poly p(nvars);
  p.terms_[e] = 1;
  return p;
}

Poly Poly::monomial(int nvars, Exps e, Rat c) {
  if (static_cast<int>(e.size()) != nvars)
    throw std::invalid_argument("exponent vector length mismatch");
  Poly p(nvars);
  if (c != 0) p.terms_[std::move(e)] = std::move(c);
  return p;
}

int64_t Poly::degree() const {
  int64_t d = -1;
  for (auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int64_t d = total_degree(terms_.begin()->first);
  for (auto& [e, c] : terms_)
    if (total_degree(e) != d) return false;
  return true;
}

void Poly::add_term(const Exps& e, const Rat& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  require_same_nvars(nvars_, o.nvars_);
  for (auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  require_same_nvars(nvars_, o.nvars_);
  for (auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same_nvars(a.nvars_, b.nvars_);
  Poly r(a.nvars_);
  for (auto& [ea, ca] : a.terms_)
    for (auto& [eb, cb] : b.terms_) r.add_term(exps_add(ea, eb), ca * cb);
  return r;
}

Poly Poly::operator-() const {
  Poly r(nvars_);
  for (auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

Poly Poly::operator*(const Rat& c) const {
  Poly r(nvars_);
  if (c == 0) return r;
  for (auto& [e, k] : terms_) r.terms_[e] = k * c;
  return r;
}

const Exps& Poly::lead_monomial(const TermOrder& ord) const {
  if (terms_.empty()) throw std::logic_error("lead_monomial of zero polynomial");
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
    if (ord.cmp(it->first, best->first) > 0) best = it;
  return best->first;
}

const Rat& Poly::lead_coeff(const TermOrder& ord) const {
  return terms_.at(lead_monomial(ord));
}

Poly Poly::derivative(int i) const {
  Poly r(nvars_);
  for (auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exps e2 = e;
    e2[i] -= 1;
    r.add_term(e2, c * e[i]);
  }
  return r;
}

Rat Poly::eval(const std::vector<Rat>& values) const {
  if (static_cast<int>(values.size()) != nvars_)
    throw std::invalid_argument("eval: value count mismatch");
  Rat acc = 0;
  for (auto& [e, c] : terms_) {
    Rat t = c;
    for (int i = 0; i < nvars_; ++i)
      for (int k = 0; k < e[i]; ++k) t *= values[i];
    acc += t;
  }
  return acc;
}

std::string Poly::str(const std::string& var) const {
  if (terms_.empty()) return "0";
  // deterministic print order: descending degrevlex
  std::vector<const Exps*> keys;
  keys.reserve(terms_.size());
  for (auto& [e, c] : terms_) keys.push_back(&e);
  TermOrder ord = TermOrder::deglex();
  std::sort(keys.begin(), keys.end(),
            [&](const Exps* a, const Exps* b) { return ord.cmp(*a, *b) > 0; });

  std::ostringstream out;
  bool first = true;
  for (auto* e : keys) {
    const Rat& c = terms_.at(*e);
    Rat a = abs(c);
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    bool has_vars = total_degree(*e) > 0;
    if (a != 1 || !has_vars) {
      out << rat_str(a);
      if (has_vars) out << " ";
    }
    bool firstv = true;
    for (std::size_t i = 0; i < e->size(); ++i) {
      if ((*e)[i] == 0) continue;
      if (!firstv) out << " ";
      firstv = false;
      out << var << (i + 1);
      if ((*e)[i] > 1) out << "^" << (*e)[i];
    }
  }
  return out.str();
}

namespace {

struct Tok {
  enum Kind { Sign, Number, Var, End } kind;
  char sign = '+';
  std::string text;    // Number
  char var_prefix = 0; // Var
  int var_index = 0;
  int var_power = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  Tok next() {
    skip_ws();
    if (pos_ >= s_.size()) return {Tok::End};
    char c = s_[pos_];
    if (c == '+' || c == '-') {
      ++pos_;
      return {Tok::Sign, c};
    }
    if (c == '*') {  // optional product separator
      ++pos_;
      return next();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/'))
        ++pos_;
      Tok t{Tok::Number};
      t.text = std::string(s_.substr(start, pos_ - start));
      return t;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      Tok t{Tok::Var};
      t.var_prefix = c;
      ++pos_;
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ == start) throw std::invalid_argument("variable without index in polynomial");
      t.var_index = std::stoi(std::string(s_.substr(start, pos_ - start)));
      if (pos_ < s_.size() && s_[pos_] == '^') {
        ++pos_;
        start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) throw std::invalid_argument("'^' without exponent");
        t.var_power = std::stoi(std::string(s_.substr(start, pos_ - start)));
      }
      return t;
    }
    throw std::invalid_argument(std::string("unexpected character in polynomial: ") + c);
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

void parse_terms(std::string_view s, int nvars, const std::string& prefixes,
                 const std::function<void(const Rat&, const std::vector<Exps>&)>& emit) {
  Lexer lex(s);
  Tok t = lex.next();
  if (t.kind == Tok::End) throw std::invalid_argument("empty polynomial text");
  while (t.kind != Tok::End) {
    Rat sign = 1;
    while (t.kind == Tok::Sign) {
      if (t.sign == '-') sign = -sign;
      t = lex.next();
    }
    if (t.kind == Tok::End)
      throw std::invalid_argument("dangling sign in polynomial text");
    Rat coeff = sign;
    bool saw_factor = false;
    std::vector<Exps> exps(prefixes.size(), Exps(nvars, 0));
    if (t.kind == Tok::Number) {
      coeff *= parse_rat(t.text);
      saw_factor = true;
      t = lex.next();
    }
    while (t.kind == Tok::Var) {
      auto p = prefixes.find(t.var_prefix);
      if (p == std::string::npos)
        throw std::invalid_argument(std::string("unknown variable prefix: ") + t.var_prefix);
      if (t.var_index < 1 || t.var_index > nvars)
        throw std::invalid_argument("variable index out of range: " +
                                    std::string(1, t.var_prefix) + std::to_string(t.var_index));
      exps[p][t.var_index - 1] += t.var_power;
      saw_factor = true;
      t = lex.next();
    }
    if (!saw_factor) throw std::invalid_argument("malformed term in polynomial text");
    emit(coeff, exps);
  }
}

Poly parse_poly(std::string_view s, int nvars) {
  Poly p(nvars);
  parse_terms(s, nvars, "x", [&](const Rat& c, const std::vector<Exps>& e) {
    p.add_term(e[0], c);
  });
  return p;
}

}  // namespace taut
