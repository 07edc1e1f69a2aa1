#include "taut/ratmat.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace taut {

namespace {

// scale a row to a primitive integer vector; keeps entries small during
// elimination
void normalize_row(std::vector<std::pair<int, Rat>>& row) {
  if (row.empty()) return;
  mpz_class den = 1, num = 0;
  for (auto& [c, v] : row) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den().get_mpz_t());
  for (auto& [c, v] : row) {
    mpz_class t = v.get_num() * (den / v.get_den());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.get_mpz_t());
  }
  if (num == 0) return;
  Rat f(den, num);
  f.canonicalize();
  for (auto& [c, v] : row) {
    v *= f;
    v.canonicalize();
  }
}

// row -= f * pivot, sparse merge
void axpy(std::vector<std::pair<int, Rat>>& row, const Rat& f,
          const std::vector<std::pair<int, Rat>>& pivot) {
  std::vector<std::pair<int, Rat>> out;
  out.reserve(row.size() + pivot.size());
  std::size_t a = 0, b = 0;
  while (a < row.size() || b < pivot.size()) {
    if (b == pivot.size() || (a < row.size() && row[a].first < pivot[b].first)) {
      out.push_back(std::move(row[a++]));
    } else if (a == row.size() || pivot[b].first < row[a].first) {
      out.emplace_back(pivot[b].first, -f * pivot[b].second);
      ++b;
    } else {
      Rat v = row[a].second - f * pivot[b].second;
      if (v != 0) out.emplace_back(row[a].first, std::move(v));
      ++a;
      ++b;
    }
  }
  row = std::move(out);
  normalize_row(row);
}

}  // namespace

void SparseRatMat::add(int r, int c, const Rat& v) {
  if (r < 0 || r >= nrows_ || c < 0 || c >= ncols_)
    throw std::out_of_range("SparseRatMat::add index");
  if (v == 0) return;
  auto& row = rows_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const auto& p, int col) { return p.first < col; });
  if (it != row.end() && it->first == c) {
    it->second += v;
    if (it->second == 0) row.erase(it);
  } else {
    row.insert(it, {c, v});
  }
}

std::size_t SparseRatMat::nnz() const {
  std::size_t n = 0;
  for (auto& r : rows_) n += r.size();
  return n;
}

int SparseRatMat::eliminate(std::vector<Row> rows, bool parallel) {
  std::erase_if(rows, [](const Row& r) { return r.empty(); });
  for (auto& r : rows) normalize_row(r);
  int rank = 0;
  while (!rows.empty()) {
    // pivot: sparsest row among those with the leftmost leading column
    int lead = rows[0].front().first;
    for (auto& r : rows) lead = std::min(lead, r.front().first);
    std::size_t piv = rows.size();
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (rows[k].front().first != lead) continue;
      if (piv == rows.size() || rows[k].size() < rows[piv].size()) piv = k;
    }
    std::swap(rows[piv], rows.back());
    Row pivot = std::move(rows.back());
    rows.pop_back();
    ++rank;

    const Rat pv = pivot.front().second;
    if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
      for (std::size_t k = 0; k < rows.size(); ++k) {
        if (!rows[k].empty() && rows[k].front().first == lead)
          axpy(rows[k], rows[k].front().second / pv, pivot);
      }
    } else {
      for (std::size_t k = 0; k < rows.size(); ++k) {
        if (!rows[k].empty() && rows[k].front().first == lead)
          axpy(rows[k], rows[k].front().second / pv, pivot);
      }
    }
    std::erase_if(rows, [](const Row& r) { return r.empty(); });
  }
  return rank;
}

int SparseRatMat::rank_serial() const { return eliminate(rows_, false); }

int SparseRatMat::rank_parallel() const { return eliminate(rows_, true); }

int SparseRatMat::rank() const {
#ifdef _OPENMP
  if (nnz() > 2000) return rank_parallel();
#endif
  return rank_serial();
}

int SparseRatMat::rank_restricted(const std::vector<bool>& keep) const {
  std::vector<Row> sub(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (auto& [c, v] : rows_[r])
      if (keep[c]) sub[r].emplace_back(c, v);
  return eliminate(std::move(sub), false);
}

std::optional<std::vector<Rat>> solve_dense(std::vector<std::vector<Rat>> A,
                                            std::vector<Rat> b) {
  std::size_t m = A.size();
  std::size_t n = m ? A[0].size() : 0;
  std::vector<int> pivot_col_of_row;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && A[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(A[p], A[r]);
    std::swap(b[p], b[r]);
    for (std::size_t k = 0; k < m; ++k) {
      if (k == r || A[k][c] == 0) continue;
      Rat f = A[k][c] / A[r][c];
      for (std::size_t j = c; j < n; ++j) A[k][j] -= f * A[r][j];
      b[k] -= f * b[r];
    }
    pivot_col_of_row.push_back(static_cast<int>(c));
    ++r;
  }
  for (std::size_t k = r; k < m; ++k)
    if (b[k] != 0) return std::nullopt;  // inconsistent
  std::vector<Rat> x(n, Rat(0));
  for (std::size_t i = 0; i < pivot_col_of_row.size(); ++i) {
    int c = pivot_col_of_row[i];
    x[c] = b[i] / A[i][c];
  }
  return x;
}

}  // namespace taut
