#include <doctest.h>

#include "taut/errors.hpp"
#include "taut/toric.hpp"

using namespace taut;

namespace {
IntMat M(std::initializer_list<std::initializer_list<long>> rows) {
  IntMat A;
  for (auto& r : rows) {
    A.emplace_back();
    for (long v : r) A.back().emplace_back(v);
  }
  return A;
}
}  // namespace

TEST_CASE("integer kernel basis") {
  SUBCASE("twisted cubic slice") {
    auto B = integer_kernel_basis(M({{1, 1, 1}, {0, 1, 2}}));
    REQUIRE(B.size() == 1);
    // basis vector is (1,-2,1) up to sign
    mpz_class s = B[0][0];
    CHECK(abs(s) == 1);
    CHECK(B[0][1] == -2 * s);
    CHECK(B[0][2] == s);
  }
  SUBCASE("identity has trivial kernel") {
    CHECK(integer_kernel_basis(M({{1, 0}, {0, 1}})).empty());
  }
  SUBCASE("rank-deficient row") {
    auto B = integer_kernel_basis(M({{1, 1}}));
    REQUIRE(B.size() == 1);
    CHECK(B[0][0] == -B[0][1]);
    CHECK(abs(B[0][0]) == 1);
  }
  SUBCASE("saturation matters: kernel of [2 -2] is generated by (1,1)") {
    auto B = integer_kernel_basis(M({{2, -2}}));
    REQUIRE(B.size() == 1);
    CHECK(abs(B[0][0]) == 1);
    CHECK(B[0][0] == B[0][1]);
  }
}

TEST_CASE("toric ideals") {
  SUBCASE("twisted cubic slice gives the quadric cone") {
    auto I = toric_ideal(M({{1, 1, 1}, {0, 1, 2}}));
    REQUIRE(I.generators().size() == 1);
    CHECK(normal_form(parse_poly("x1 x3 - x2^2", 3), I).is_zero());
    CHECK_FALSE(normal_form(parse_poly("x1 x3", 3), I).is_zero());
  }

  SUBCASE("injective monomial map gives the zero ideal") {
    auto I = toric_ideal(M({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    CHECK(I.is_zero_ideal());
  }

  SUBCASE("A = [1 1] gives (x1 - x2), not (0)") {
    auto I = toric_ideal(M({{1, 1}}));
    REQUIRE(I.generators().size() == 1);
    CHECK(normal_form(parse_poly("x1 - x2", 2), I).is_zero());
  }

  SUBCASE("zero column rejected") {
    CHECK_THROWS_AS(toric_ideal(M({{1, 0}, {2, 0}})), PreconditionError);
  }

  SUBCASE("budget exceeded raises a resource error") {
    CHECK_THROWS_AS(toric_ideal(M({{1, 1, 1, 1}, {0, 1, 3, 4}}), 2), ResourceError);
  }
}

TEST_CASE("brute-force lattice oracle, degree <= 6") {
  // membership of x^u - x^v must coincide with Au = Av
  auto A = M({{1, 1, 1}, {0, 1, 2}});
  auto I = toric_ideal(A);

  std::vector<Exps> all;
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; a + b <= 6; ++b)
      for (int c = 0; a + b + c <= 6; ++c) all.push_back({a, b, c});

  int inside = 0;
  for (auto& u : all) {
    for (auto& v : all) {
      if (u == v) continue;
      Poly bin = Poly::monomial(3, u, 1) - Poly::monomial(3, v, 1);
      bool member = normal_form(bin, I).is_zero();
      bool lattice = toric_degree(A, u) == toric_degree(A, v);
      CHECK(member == lattice);
      if (member) ++inside;
    }
  }
  CHECK(inside > 0);
}

TEST_CASE("toric degrees") {
  auto A = M({{1, 1, 1}, {0, 1, 2}});
  auto d = toric_degree(A, parse_poly("x1 x3 - x2^2", 3));
  REQUIRE(d.size() == 2);
  CHECK(d[0] == 2);
  CHECK(d[1] == 2);
  CHECK_THROWS_AS(toric_degree(A, parse_poly("x1 + x1 x2", 3)), PreconditionError);
}
