#include <doctest.h>

#include <random>

#include "taut/ratmat.hpp"

using namespace taut;

TEST_CASE("exact sparse rank on known matrices") {
  SUBCASE("identity") {
    SparseRatMat M(4, 4);
    for (int i = 0; i < 4; ++i) M.add(i, i, Rat(1));
    CHECK(M.rank_serial() == 4);
    CHECK(M.rank_parallel() == 4);
  }
  SUBCASE("rank-one outer product") {
    SparseRatMat M(3, 5);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 5; ++j) M.add(i, j, Rat(i + 1) * Rat(2 * j + 1, 3));
    CHECK(M.rank_serial() == 1);
    CHECK(M.rank_parallel() == 1);
  }
  SUBCASE("zero matrix") {
    SparseRatMat M(3, 3);
    CHECK(M.rank_serial() == 0);
  }
  SUBCASE("cancellation to zero entries") {
    SparseRatMat M(2, 2);
    M.add(0, 0, Rat(1, 2));
    M.add(0, 0, Rat(-1, 2));
    M.add(1, 1, Rat(3));
    CHECK(M.nnz() == 1);
    CHECK(M.rank_serial() == 1);
  }
}

TEST_CASE("serial and parallel elimination agree on random matrices") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4), density(0, 9);
  for (int trial = 0; trial < 12; ++trial) {
    int rows = 8 + static_cast<int>(rng() % 40);
    int cols = 8 + static_cast<int>(rng() % 40);
    SparseRatMat M(rows, cols);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c)
        if (density(rng) < 3) {
          int n = num(rng);
          if (n != 0) M.add(r, c, Rat(n, den(rng)));
        }
    int rs = M.rank_serial();
    CHECK(rs == M.rank_parallel());
    CHECK(rs <= std::min(rows, cols));
  }
}

TEST_CASE("restricted-column rank") {
  SparseRatMat M(2, 4);
  M.add(0, 0, Rat(1));
  M.add(0, 2, Rat(1));
  M.add(1, 2, Rat(1));
  std::vector<bool> keep = {true, true, false, false};
  CHECK(M.rank_restricted(keep) == 1);
  CHECK(M.rank_serial() == 2);
}

TEST_CASE("dense exact solve") {
  SUBCASE("unique solution") {
    auto x = solve_dense({{Rat(2), Rat(0)}, {Rat(1), Rat(3)}}, {Rat(4), Rat(5)});
    REQUIRE(x);
    CHECK((*x)[0] == Rat(2));
    CHECK((*x)[1] == Rat(1));
  }
  SUBCASE("inconsistent") {
    auto x = solve_dense({{Rat(1), Rat(1)}, {Rat(2), Rat(2)}}, {Rat(1), Rat(3)});
    CHECK_FALSE(x);
  }
  SUBCASE("underdetermined picks a valid solution") {
    auto x = solve_dense({{Rat(1), Rat(1)}}, {Rat(7)});
    REQUIRE(x);
    CHECK((*x)[0] + (*x)[1] == Rat(7));
  }
  SUBCASE("overdetermined consistent") {
    auto x = solve_dense({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(1), Rat(1)}},
                         {Rat(2), Rat(3), Rat(5)});
    REQUIRE(x);
    CHECK((*x)[0] == Rat(2));
    CHECK((*x)[1] == Rat(3));
  }
}
