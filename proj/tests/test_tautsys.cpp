#include <doctest.h>

#include "fixtures.hpp"
#include "taut/bfunction.hpp"
#include "taut/errors.hpp"
#include "taut/tautsys.hpp"

using namespace taut;

TEST_CASE("g-stability check") {
  SUBCASE("quadric cone is stable under all of g") {
    auto rep = fixtures::quadric_cone_rep();
    OrbitClosureData Y(PolyIdeal(3, {fixtures::quadric_cone_ideal_gen()}), 2);
    auto report = check_g_stability(rep, Y);
    CHECK(report.all_ok);
    CHECK(report.entries.size() == 4);
  }
  SUBCASE("rotation moves (x1) off itself") {
    auto lie = LieAlgebra::abelian(1);
    std::vector<RatMatrix> ms = {fixtures::mat({{0, -1}, {1, 0}})};
    RepData rep(lie, 2, ms);
    OrbitClosureData Y(PolyIdeal(2, {parse_poly("x1", 2)}), 1);
    auto report = check_g_stability(rep, Y);
    CHECK_FALSE(report.all_ok);
    REQUIRE(report.entries.size() == 1);
    CHECK(report.entries[0].basis_index == 0);
    CHECK(report.entries[0].gen_index == 0);
    CHECK_FALSE(report.entries[0].residual.is_zero());
    CHECK_THROWS_AS(build_taut(rep, Y, Character(lie, {Rat(0)}), false), PreconditionError);
  }
  SUBCASE("the zero ideal is vacuously stable") {
    auto rep = fixtures::quadric_cone_rep();
    OrbitClosureData Y(PolyIdeal(3, {}), 3);
    CHECK(check_g_stability(rep, Y).all_ok);
  }
}

TEST_CASE("build_taut assembles the twisted presentation") {
  auto rep = fixtures::quadric_cone_rep();
  OrbitClosureData Y(PolyIdeal(3, {fixtures::quadric_cone_ideal_gen()}), 2);

  SUBCASE("beta = 0 takes beta' = trace drho") {
    auto T = build_taut(rep, Y, rep.zero_character(), true);
    auto& gens = T.weyl_ideal.generators();
    REQUIRE(gens.size() == 5);
    CHECK(gens[0] == WeylElement::from_poly(fixtures::quadric_cone_ideal_gen()));
    CHECK(gens[1] == parse_weyl("-x1 d1 - x2 d2 - x3 d3 - 3", 3));  // Z_e - 3
    CHECK(gens[2] == rep.vector_field(1));                          // traceless directions
    CHECK(gens[3] == rep.vector_field(2));
    CHECK(gens[4] == rep.vector_field(3));
  }
  SUBCASE("includes_scaling = false drops the scaling generator") {
    auto T = build_taut(rep, Y, rep.zero_character(), false);
    CHECK(T.weyl_ideal.generators().size() == 4);
    for (auto& g : T.weyl_ideal.generators())
      CHECK(g != parse_weyl("-x1 d1 - x2 d2 - x3 d3 - 3", 3));
  }
}

TEST_CASE("GKZ presentation from the twisted cubic slice") {
  auto A = fixtures::twisted_cubic_slice();
  auto rep = fixtures::torus_rep(A);
  OrbitClosureData Y(toric_ideal(A), 2);
  auto beta = rep.character({Rat(0), Rat(0)});
  auto T = build_taut(rep, Y, beta, true);
  REQUIRE(T.weyl_ideal.generators().size() == 3);
  // beta' = trace drho = (3, 3)
  CHECK(T.beta_prime.values() == std::vector<Rat>{Rat(3), Rat(3)});
  CHECK(T.weyl_ideal.generators()[1] == parse_weyl("-x1 d1 - x2 d2 - x3 d3 - 3", 3));
  CHECK(T.weyl_ideal.generators()[2] == parse_weyl("-x2 d2 - 2 x3 d3 - 3", 3));
}

TEST_CASE("nonvanishing dichotomy on the quadric cone") {
  auto rep = fixtures::quadric_cone_rep();
  OrbitClosureData Y(PolyIdeal(3, {fixtures::quadric_cone_ideal_gen()}), 2);

  auto T0 = build_taut(rep, Y, rep.zero_character(), false);
  auto out = minimal_polynomial_of_theta(T0.weyl_ideal, theta_operator(rep), 16);
  REQUIRE(out.found());

  auto at = [&](const Rat& be) {
    return build_taut(rep, Y, rep.character({be, Rat(0), Rat(0), Rat(0)}), true);
  };
  CHECK(is_nonzero(at(Rat(1))));
  CHECK(is_nonzero(at(Rat(0))));
  CHECK_FALSE(is_nonzero(at(Rat(1, 2))));
  CHECK_FALSE(is_nonzero(at(Rat(5))));

  // Groebner verdict and root test agree across the scan grid
  for (auto& be : {Rat(-2), Rat(-1), Rat(-1, 2), Rat(0), Rat(1, 2), Rat(1), Rat(3, 2), Rat(2)}) {
    auto verdict = is_nonzero_crosschecked(at(be), *out.b);
    CHECK(verdict.agrees_with_bfunction.value());
  }
}

TEST_CASE("is_nonzero is presentation-independent") {
  auto rep = fixtures::quadric_cone_rep();
  auto f = fixtures::quadric_cone_ideal_gen();
  auto beta = rep.character({Rat(1), Rat(0), Rat(0), Rat(0)});

  // permuted generators and the reduced basis give the same verdicts
  PolyIdeal I1(3, {f});
  PolyIdeal I2(3, {f * Rat(-2)});
  PolyIdeal I3(3, I1.groebner());
  for (auto* I : {&I1, &I2, &I3}) {
    OrbitClosureData Y(*I, 2);
    CHECK(is_nonzero(build_taut(rep, Y, beta, true)));
    CHECK_FALSE(is_nonzero(build_taut(rep, Y, rep.character({Rat(1, 2), Rat(0), Rat(0), Rat(0)}),
                                      true)));
  }
}

TEST_CASE("orbit closure validation") {
  auto f = fixtures::quadric_cone_ideal_gen();
  CHECK_THROWS_AS(OrbitClosureData(PolyIdeal(3, {f}), 5), ValidationError);
  CHECK_THROWS_AS(OrbitClosureData(PolyIdeal(3, {f}), 2, std::nullopt, std::vector<int>{3}),
                  ValidationError);
  CHECK_THROWS_AS(OrbitClosureData(PolyIdeal(3, {f}), 2, std::nullopt, std::vector<int>{2, 2}),
                  ValidationError);
  OrbitClosureData ok(PolyIdeal(3, {f}), 2, std::nullopt, std::vector<int>{2});
  CHECK(ok.is_homogeneous());
}

TEST_CASE("veronese and segre constructors") {
  SUBCASE("exponent order puts pure powers first") {
    auto e = veronese_exponents(2, 2);
    REQUIRE(e.size() == 3);
    CHECK(e[0] == Exps{2, 0});
    CHECK(e[1] == Exps{1, 1});
    CHECK(e[2] == Exps{0, 2});
  }
  SUBCASE("gl(2) on Sym^2 matches the quadric cone data") {
    auto rep = veronese_rep(2, 2);
    CHECK(rep.N() == 3);
    CHECK(rep.lie().dim() == 4);
    // trace drho on (E11, E12, E21, E22)
    CHECK(rep.trace_drho().values() == std::vector<Rat>{Rat(3), Rat(0), Rat(0), Rat(3)});
    // the ideal is stable under all of gl(2)
    OrbitClosureData Y(veronese_ideal(2, 2), 2);
    CHECK(check_g_stability(rep, Y).all_ok);
  }
  SUBCASE("veronese_ideal(2,2) is the quadric cone") {
    auto I = veronese_ideal(2, 2);
    CHECK(normal_form(fixtures::quadric_cone_ideal_gen(), I).is_zero());
    REQUIRE(I.generators().size() == 1);
  }
  SUBCASE("veronese_ideal(3,3) has the 27 classical quadrics") {
    auto I = veronese_ideal(3, 3);
    CHECK(I.nvars() == 10);
    CHECK(I.generators().size() == 27);
    for (auto& g : I.generators()) CHECK(g.degree() == 2);
  }
  SUBCASE("segre 2x2") {
    auto I = segre_ideal(2, 2);
    REQUIRE(I.generators().size() == 1);
    CHECK(I.generators()[0] == fixtures::segre_cone_ideal_gen());
  }
  SUBCASE("theta needs a flagged scaling element") {
    CHECK_THROWS_AS(theta_operator(veronese_rep(2, 2)), PreconditionError);
  }
}
