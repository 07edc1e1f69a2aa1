#include "taut/rational.hpp"

#include <cctype>

namespace taut {

Rat parse_rat(std::string_view s) {
  // strip surrounding whitespace
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw std::invalid_argument("empty rational literal");

  auto check_int = [](std::string_view t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };

  std::string str(s);
  auto slash = str.find('/');
  if (slash == std::string::npos) {
    if (!check_int(str)) throw std::invalid_argument("bad rational literal: " + str);
    return Rat(mpz_class(str));
  }
  std::string num = str.substr(0, slash), den = str.substr(slash + 1);
  if (!check_int(num) || !check_int(den))
    throw std::invalid_argument("bad rational literal: " + str);
  mpz_class d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: " + str);
  Rat r(mpz_class(num), d);
  r.canonicalize();
  return r;
}

std::string rat_str(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace taut
