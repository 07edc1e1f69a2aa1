#include <doctest.h>

#include <random>

#include "taut/errors.hpp"
#include "taut/weyl_groebner.hpp"

using namespace taut;

namespace {

WeylElement W(const std::string& s, int n) { return parse_weyl(s, n); }

WeylElement random_weyl(std::mt19937_64& rng, int nvars, int maxexp, int nterms) {
  std::uniform_int_distribution<int> coef(-3, 3), e(0, maxexp);
  WeylElement w(nvars);
  for (int t = 0; t < nterms; ++t) {
    WeylKey k{Exps(nvars), Exps(nvars)};
    for (int i = 0; i < nvars; ++i) {
      k.x[i] = e(rng);
      k.d[i] = e(rng);
    }
    int c = coef(rng);
    if (c != 0) w.add_term(k, Rat(c));
  }
  return w;
}

}  // namespace

TEST_CASE("canonical commutation relations") {
  int n = 2;
  SUBCASE("d1 * x1 = x1 d1 + 1") {
    CHECK(weyl_mul(W("d1", n), W("x1", n)) == W("x1 d1 + 1", n));
  }
  SUBCASE("x1 * d1 stays ordered") {
    CHECK(weyl_mul(W("x1", n), W("d1", n)) == W("x1 d1", n));
  }
  SUBCASE("d1^2 * x1 = x1 d1^2 + 2 d1, two Leibniz steps") {
    CHECK(weyl_mul(W("d1^2", n), W("x1", n)) == W("x1 d1^2 + 2 d1", n));
  }
  SUBCASE("distinct variables commute") {
    CHECK(weyl_mul(W("d1", n), W("x2", n)) == W("x2 d1", n));
  }
  SUBCASE("d^2 x^2 full expansion") {
    CHECK(weyl_mul(W("d1^2", n), W("x1^2", n)) ==
          W("x1^2 d1^2 + 4 x1 d1 + 2", n));
  }
}

TEST_CASE("weyl element text round-trip") {
  int n = 3;
  auto w = W("-1/2 x1^2 d3 + x2 d2 - 3", n);
  CHECK(parse_weyl(w.str(), n) == w);
  CHECK(W("0", n).is_zero());
  CHECK(w.bernstein_degree() == 3);
}

TEST_CASE("weight and degree bookkeeping") {
  int n = 2;
  auto euler = W("x1 d1 + x2 d2", n);
  CHECK(euler.is_weight_homogeneous());
  CHECK_FALSE(W("x1 d1 + x1", n).is_weight_homogeneous());

  std::mt19937_64 rng(7);
  for (int t = 0; t < 30; ++t) {
    auto a = random_weyl(rng, 2, 2, 2), b = random_weyl(rng, 2, 2, 2);
    if (a.is_zero() || b.is_zero()) continue;
    auto p = weyl_mul(a, b);
    // Bernstein degree is subadditive; commutators only lower it
    CHECK(p.bernstein_degree() <= a.bernstein_degree() + b.bernstein_degree());
    if (!p.is_zero()) {
      // weights add exactly termwise
      for (auto& [k, c] : p.terms()) {
        bool found = false;
        for (auto& [ka, ca] : a.terms())
          for (auto& [kb, cb] : b.terms())
            if (k.weight() == ka.weight() + kb.weight()) found = true;
        CHECK(found);
      }
    }
  }
}

TEST_CASE("associativity on random elements") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 25; ++t) {
    auto a = random_weyl(rng, 2, 2, 2);
    auto b = random_weyl(rng, 2, 2, 2);
    auto c = random_weyl(rng, 2, 2, 2);
    CHECK(weyl_mul(weyl_mul(a, b), c) == weyl_mul(a, weyl_mul(b, c)));
  }
}

TEST_CASE("left Groebner bases") {
  int n = 1;
  auto ord = TermOrder::degrevlex();

  SUBCASE("principal ideal") {
    WeylIdeal J(n, {W("d1", n)});
    auto gb = J.groebner(ord);
    REQUIRE(gb.size() == 1);
    CHECK(gb[0] == W("d1", n));
    CHECK_FALSE(J.contains_one(ord));
  }

  SUBCASE("unit ideal") {
    WeylIdeal J(n, {W("1", n)});
    auto gb = J.groebner(ord);
    REQUIRE(gb.size() == 1);
    CHECK(J.contains_one(ord));
  }

  SUBCASE("hand S-pair oracle: (x d - 1, d^2) stays proper") {
    // d*(x d - 1) - x*d^2 = 0, so both generators survive reduction
    WeylIdeal J(n, {W("x1 d1 - 1", n), W("d1^2", n)});
    auto gb = J.groebner(ord);
    REQUIRE(gb.size() == 2);
    // ascending degrevlex on (x,d): d1^2 sorts below x1 d1
    CHECK(gb[0] == W("d1^2", n));
    CHECK(gb[1] == W("x1 d1 - 1", n));
    CHECK_FALSE(J.contains_one(ord));
    CHECK(weyl_normal_form(W("x1 d1", n), J) == W("1", n));
  }

  SUBCASE("hand S-pair oracle: (x d - 2, d^2) collapses to the unit ideal") {
    // d*(x d - 2) - x*d^2 = -d, then x d - 2 reduces to the constant -2
    WeylIdeal J(n, {W("x1 d1 - 2", n), W("d1^2", n)});
    CHECK(J.contains_one(ord));
  }

  SUBCASE("lex is rejected") {
    WeylIdeal J(n, {W("d1", n)});
    CHECK_THROWS_AS(J.groebner(TermOrder::lex()), PreconditionError);
  }
}

TEST_CASE("left membership soundness") {
  // keep the random elements small: generic high-degree operators in D_2 can
  // blow up the basis computation, which is not what this property is about
  int n = 2;
  std::mt19937_64 rng(1234);
  auto ord = TermOrder::degrevlex();
  int done = 0;
  for (int t = 0; t < 12; ++t) {
    std::vector<WeylElement> gens = {random_weyl(rng, n, 1, 2), random_weyl(rng, n, 1, 2)};
    std::erase_if(gens, [](auto& g) { return g.is_zero(); });
    auto p = random_weyl(rng, n, 1, 2);
    if (gens.empty()) continue;
    std::vector<WeylElement> gb;
    try {
      gb = weyl_left_buchberger(gens, ord, 5000);
    } catch (const ResourceError&) {
      continue;
    }
    for (auto& g : gens) CHECK(weyl_reduce_full(g, gb, ord).is_zero());
    // random left multiples stay inside
    CHECK(weyl_reduce_full(weyl_mul(p, gens[0]), gb, ord).is_zero());
    ++done;
  }
  CHECK(done >= 6);
}
