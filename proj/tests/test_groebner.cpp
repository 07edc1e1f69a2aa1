#include <doctest.h>

#include <random>

#include "taut/errors.hpp"
#include "taut/groebner.hpp"

using namespace taut;

namespace {

Poly P(const std::string& s, int n) { return parse_poly(s, n); }

// random sparse polynomial for property checks
Poly random_poly(std::mt19937_64& rng, int nvars, int maxdeg, int nterms) {
  std::uniform_int_distribution<int> coef(-4, 4), deg(0, maxdeg);
  Poly p(nvars);
  for (int t = 0; t < nterms; ++t) {
    Exps e(nvars, 0);
    int budget = deg(rng);
    for (int i = 0; i < nvars && budget > 0; ++i) {
      std::uniform_int_distribution<int> part(0, budget);
      e[i] = part(rng);
      budget -= e[i];
    }
    int c = coef(rng);
    if (c != 0) p.add_term(e, Rat(c));
  }
  return p;
}

}  // namespace

TEST_CASE("groebner basics") {
  int n = 3;
  auto ord = TermOrder::degrevlex();

  SUBCASE("single binomial is already a reduced basis") {
    PolyIdeal I(n, {P("x1 x3 - x2^2", n)});
    auto gb = I.groebner(ord);
    REQUIRE(gb.size() == 1);
    // degrevlex leads with x2^2, so the monic form is x2^2 - x1 x3
    CHECK(gb[0] == P("x2^2 - x1 x3", n));
  }

  SUBCASE("unit ideal") {
    PolyIdeal I(n, {P("1", n), P("x1", n)});
    auto gb = I.groebner(ord);
    REQUIRE(gb.size() == 1);
    CHECK(gb[0] == P("1", n));
    CHECK(contains_one(gb));
  }

  SUBCASE("zero generators are skipped") {
    PolyIdeal I(n, {Poly(n), P("x1", n)});
    CHECK(I.groebner(ord).size() == 1);
  }

  SUBCASE("hand-run Buchberger oracle under lex") {
    // {x^2, xy + y^2}: the S-pair chain yields y^3
    int m = 2;
    PolyIdeal I(m, {P("x1^2", m), P("x1 x2 + x2^2", m)});
    auto gb = I.groebner(TermOrder::lex());
    REQUIRE(gb.size() == 3);
    CHECK(gb[0] == P("x2^3", m));
    CHECK(gb[1] == P("x1 x2 + x2^2", m));
    CHECK(gb[2] == P("x1^2", m));
  }
}

TEST_CASE("normal form") {
  int n = 3;
  PolyIdeal I(n, {P("x1 x3 - x2^2", n)});

  SUBCASE("one division step under lex") {
    // lex leads with x1 x3, so x1 x3 reduces to x2^2
    CHECK(normal_form(P("x1 x3", n), I, TermOrder::lex()) == P("x2^2", n));
  }
  SUBCASE("under degrevlex the lead is x2^2") {
    CHECK(normal_form(P("x2^2", n), I) == P("x1 x3", n));
    CHECK(normal_form(P("x1 x3", n), I) == P("x1 x3", n));
  }
  SUBCASE("zero and membership") {
    CHECK(normal_form(Poly(n), I).is_zero());
    for (auto& g : I.generators()) CHECK(normal_form(g, I).is_zero());
    CHECK(normal_form(P("x1 x3 - x2^2", n) * P("x1 + 5 x3^2", n), I).is_zero());
  }
}

TEST_CASE("groebner properties on random small ideals") {
  std::mt19937_64 rng(20240817);
  auto ord = TermOrder::degrevlex();
  for (int trial = 0; trial < 25; ++trial) {
    int n = 2 + static_cast<int>(rng() % 2);
    std::vector<Poly> gens;
    int k = 2 + static_cast<int>(rng() % 2);
    for (int i = 0; i < k; ++i) gens.push_back(random_poly(rng, n, 3, 3));
    PolyIdeal I(n, gens);
    auto gb = I.groebner(ord);

    // every generator reduces to zero
    for (auto& g : gens) CHECK(normal_form(g, I).is_zero());

    // normal form is idempotent and compatible with addition
    Poly p = random_poly(rng, n, 3, 3), q = random_poly(rng, n, 3, 3);
    Poly np = normal_form(p, I);
    CHECK(normal_form(np, I) == np);
    CHECK(normal_form(p + q, I) == normal_form(normal_form(p, I) + normal_form(q, I), I));

    // permuting the generators yields the identical reduced basis
    std::vector<Poly> perm(gens.rbegin(), gens.rend());
    CHECK(buchberger(perm, ord) == gb);
  }
}

TEST_CASE("step budget produces a resource error") {
  int n = 3;
  std::vector<Poly> gens = {P("x1^2 x2 - x3^2", n), P("x2^3 - x1 x3", n),
                            P("x1 x3^2 - x2^2", n)};
  CHECK_THROWS_AS(buchberger(gens, TermOrder::degrevlex(), 1), ResourceError);
}
