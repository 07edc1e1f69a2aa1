#include <doctest.h>

#include "taut/poly.hpp"

using namespace taut;

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rat("3/6") == Rat(1, 2));
  CHECK(parse_rat("-4/2") == Rat(-2));
  CHECK(parse_rat("0") == 0);
  CHECK(rat_str(Rat(-1, 3)) == "-1/3");
  CHECK(rat_str(Rat(7)) == "7");
  CHECK_THROWS(parse_rat("1/0"));
  CHECK_THROWS(parse_rat("x"));
  CHECK_THROWS(parse_rat(""));
  CHECK(rat_is_half_integer(parse_rat("-5/2")));
  CHECK(rat_is_half_integer(parse_rat("3")));
  CHECK_FALSE(rat_is_half_integer(parse_rat("1/3")));
}

TEST_CASE("polynomial arithmetic") {
  int n = 3;
  Poly x1 = Poly::variable(n, 0), x2 = Poly::variable(n, 1), x3 = Poly::variable(n, 2);

  SUBCASE("cancellation") {
    Poly p = (x1 + x2) + (-x2);
    CHECK(p == x1);
  }
  SUBCASE("multiplicative identity") {
    Poly f = x1 * x3 - x2 * x2;
    CHECK(f * Poly(n, Rat(1)) == f);
  }
  SUBCASE("difference of squares, expanded by hand") {
    Poly p = (x1 + x2) * (x1 - x2);
    Poly expect = x1 * x1 - x2 * x2;
    CHECK(p == expect);
    CHECK(p.term_count() == 2);
  }
  SUBCASE("mismatched ambient dimension") {
    Poly y = Poly::variable(2, 0);
    CHECK_THROWS(x1 + y);
  }
}

TEST_CASE("polynomial text round-trip") {
  int n = 3;
  auto p = parse_poly("-3/2 x1^2 x3 + x2 - 1", n);
  CHECK(p.term_count() == 3);
  CHECK(p.str() == "-3/2 x1^2 x3 + x2 - 1");
  CHECK(parse_poly(p.str(), n) == p);

  CHECK(parse_poly("0", n).is_zero());
  CHECK(parse_poly("x1 x3 - x2^2", n).str() == "x1 x3 - x2^2");
  CHECK(parse_poly("2x1", n) == Poly::variable(n, 0) * Rat(2));
  CHECK(parse_poly("5", n) == Poly(n, Rat(5)));
  CHECK_THROWS(parse_poly("x4", n));
  CHECK_THROWS(parse_poly("", n));
  CHECK_THROWS(parse_poly("1 +", n));
}

TEST_CASE("term orders") {
  // x1 x3 vs x2^2 in three variables
  Exps a{1, 0, 1}, b{0, 2, 0};
  CHECK(TermOrder::degrevlex().cmp(a, b) < 0);  // revlex prefers fewer trailing vars
  CHECK(TermOrder::lex().cmp(a, b) > 0);
  CHECK(TermOrder::deglex().cmp(a, b) > 0);

  // elimination block: any t beats everything t-free
  Exps t1{1, 0, 0}, big{0, 5, 5};
  CHECK(TermOrder::elimination_block(1).cmp(t1, big) > 0);

  // weighted order
  auto w = TermOrder::weighted({1, 10, 1});
  CHECK(w.cmp(Exps{0, 1, 0}, Exps{5, 0, 0}) > 0);
  CHECK_FALSE(w.degree_compatible());
  CHECK(TermOrder::degrevlex().degree_compatible());
  CHECK_FALSE(TermOrder::lex().degree_compatible());
}

TEST_CASE("derivative and evaluation") {
  int n = 2;
  auto p = parse_poly("x1^2 x2 + 3 x2", n);
  CHECK(p.derivative(0) == parse_poly("2 x1 x2", n));
  CHECK(p.derivative(1) == parse_poly("x1^2 + 3", n));
  CHECK(p.eval({Rat(2), Rat(-1)}) == Rat(-7));
  CHECK(p.is_homogeneous() == false);
  CHECK(parse_poly("x1 x2 - x2^2", n).is_homogeneous());
}
