#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "taut/rational.hpp"

namespace taut {

// Sparse matrix over Q for exact rank computations. Rows are kept as sorted
// (column, value) lists.
//
// rank_serial is the reference implementation; rank_parallel eliminates the
// pivot column from all affected rows in an OpenMP loop. Both run the same
// fraction-free-normalized elimination and must agree exactly; the test suite
// checks that and tools/bench_rank compares their timings.
class SparseRatMat {
 public:
  SparseRatMat() = default;
  SparseRatMat(int rows, int cols) : nrows_(rows), ncols_(cols), rows_(rows) {}

  int rows() const { return nrows_; }
  int cols() const { return ncols_; }

  void add(int r, int c, const Rat& v);
  std::size_t nnz() const;

  int rank_serial() const;
  int rank_parallel() const;
  int rank() const;  // parallel when OpenMP is available and the size warrants

  // column-subset rank helper: rank of the matrix restricted to columns where
  // keep[c] is true
  int rank_restricted(const std::vector<bool>& keep) const;

 private:
  using Row = std::vector<std::pair<int, Rat>>;
  static int eliminate(std::vector<Row> rows, bool parallel);

  int nrows_ = 0, ncols_ = 0;
  std::vector<Row> rows_;
};

// Exact dense solve of A x = b (A is m x n, m equations). Returns a solution
// if the system is consistent, std::nullopt otherwise.
std::optional<std::vector<Rat>> solve_dense(std::vector<std::vector<Rat>> A,
                                            std::vector<Rat> b);

}  // namespace taut
