#include "taut/repdata.hpp"

#include <sstream>

#include "taut/errors.hpp"

namespace taut {

namespace {

// rank of a list of rational vectors, by Gaussian elimination
int rat_rank(std::vector<std::vector<Rat>> rows) {
  int rank = 0;
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k == r || rows[k][c] == 0) continue;
      Rat f = rows[k][c] / rows[r][c];
      for (std::size_t j = c; j < cols; ++j) rows[k][j] -= f * rows[r][j];
    }
    ++r;
    ++rank;
  }
  return rank;
}

}  // namespace

LieAlgebra::LieAlgebra(int dim, std::vector<std::vector<std::vector<Rat>>> c,
                       std::optional<int> scaling_element)
    : m_(dim), c_(std::move(c)), e_(scaling_element) {
  if (m_ <= 0) throw ValidationError("Lie algebra dimension must be positive");
  if (static_cast<int>(c_.size()) != m_)
    throw ValidationError("structure constant table has wrong size");
  for (int i = 0; i < m_; ++i) {
    if (static_cast<int>(c_[i].size()) != m_)
      throw ValidationError("structure constant table has wrong size");
    for (int j = 0; j < m_; ++j)
      if (static_cast<int>(c_[i][j].size()) != m_)
        throw ValidationError("structure constant table has wrong size");
  }
  if (e_ && (*e_ < 0 || *e_ >= m_))
    throw ValidationError("scaling element index out of range");

  // antisymmetry
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j)
      for (int k = 0; k < m_; ++k)
        if (c_[i][j][k] != -c_[j][i][k]) {
          std::ostringstream msg;
          msg << "structure constants not antisymmetric at (" << i + 1 << "," << j + 1 << ")";
          throw ValidationError(msg.str());
        }

  // Jacobi: sum over cyclic permutations of [ [xi_i,xi_j], xi_k ] vanishes
  auto jac = [&](int i, int j, int k, int r) {
    Rat s = 0;
    for (int l = 0; l < m_; ++l)
      s += c_[i][j][l] * c_[l][k][r] + c_[j][k][l] * c_[l][i][r] + c_[k][i][l] * c_[l][j][r];
    return s;
  };
  for (int i = 0; i < m_; ++i)
    for (int j = i + 1; j < m_; ++j)
      for (int k = j + 1; k < m_; ++k)
        for (int r = 0; r < m_; ++r)
          if (jac(i, j, k, r) != 0) {
            std::ostringstream msg;
            msg << "Jacobi identity fails at (" << i + 1 << "," << j + 1 << "," << k + 1 << ")";
            throw ValidationError(msg.str());
          }
}

LieAlgebra LieAlgebra::from_brackets(
    int dim, const std::vector<std::tuple<int, int, std::vector<Rat>>>& table,
    std::optional<int> scaling_element) {
  std::vector c(dim, std::vector(dim, std::vector<Rat>(dim, Rat(0))));
  for (auto& [i, j, coeffs] : table) {
    if (i < 0 || j < 0 || i >= dim || j >= dim || i == j) {
      std::ostringstream msg;
      msg << "bad bracket table entry (" << i + 1 << "," << j + 1 << ")";
      throw ValidationError(msg.str());
    }
    if (static_cast<int>(coeffs.size()) != dim) {
      std::ostringstream msg;
      msg << "bracket coefficient vector at (" << i + 1 << "," << j + 1
          << ") has wrong length";
      throw ValidationError(msg.str());
    }
    for (int k = 0; k < dim; ++k) {
      c[i][j][k] = coeffs[k];
      c[j][i][k] = -coeffs[k];
    }
  }
  return LieAlgebra(dim, std::move(c), scaling_element);
}

LieAlgebra LieAlgebra::abelian(int dim, std::optional<int> scaling_element) {
  return LieAlgebra(dim, std::vector(dim, std::vector(dim, std::vector<Rat>(dim, Rat(0)))),
                    scaling_element);
}

int LieAlgebra::derived_rank() const {
  std::vector<std::vector<Rat>> rows;
  for (int i = 0; i < m_; ++i)
    for (int j = i + 1; j < m_; ++j) rows.push_back(c_[i][j]);
  if (rows.empty()) return 0;
  return rat_rank(std::move(rows));
}

bool LieAlgebra::g0_is_perfect() const {
  if (!e_) throw PreconditionError("no scaling element flagged");
  int e = *e_;
  for (int j = 0; j < m_; ++j)
    for (int k = 0; k < m_; ++k)
      if (c_[e][j][k] != 0)
        throw PreconditionError("scaling element is not central");
  // brackets of the non-e elements must span the non-e coordinate space
  std::vector<std::vector<Rat>> rows;
  for (int i = 0; i < m_; ++i) {
    if (i == e) continue;
    for (int j = i + 1; j < m_; ++j) {
      if (j == e) continue;
      std::vector<Rat> row;
      for (int k = 0; k < m_; ++k)
        if (k != e) row.push_back(c_[i][j][k]);
      // a bracket leaking onto e would contradict centrality + antisymmetry
      // only through the table itself; reject loudly
      if (c_[i][j][e] != 0)
        throw ValidationError("bracket of g0 elements has a component on e");
      rows.push_back(std::move(row));
    }
  }
  if (rows.empty()) return m_ == 1;
  return rat_rank(std::move(rows)) == m_ - 1;
}

Character::Character(LieAlgebra lie, std::vector<Rat> values)
    : lie_(std::move(lie)), v_(std::move(values)) {
  if (static_cast<int>(v_.size()) != lie_.dim())
    throw ValidationError("character value count does not match the algebra dimension");
  for (int i = 0; i < lie_.dim(); ++i)
    for (int j = i + 1; j < lie_.dim(); ++j) {
      Rat s = 0;
      for (int k = 0; k < lie_.dim(); ++k) s += lie_.bracket(i, j)[k] * v_[k];
      if (s != 0) {
        std::ostringstream msg;
        msg << "character does not vanish on the bracket (" << i + 1 << "," << j + 1 << ")";
        throw ValidationError(msg.str());
      }
    }
}

const Rat& Character::on_e() const {
  auto e = lie_.scaling_element();
  if (!e) throw PreconditionError("no scaling element flagged");
  return v_[*e];
}

Character Character::operator+(const Character& o) const {
  if (!(lie_ == o.lie_)) throw ValidationError("characters on different algebras");
  std::vector<Rat> v(v_.size());
  for (std::size_t i = 0; i < v_.size(); ++i) v[i] = v_[i] + o.v_[i];
  return Character(lie_, std::move(v));
}

Character Character::operator-(const Character& o) const {
  if (!(lie_ == o.lie_)) throw ValidationError("characters on different algebras");
  std::vector<Rat> v(v_.size());
  for (std::size_t i = 0; i < v_.size(); ++i) v[i] = v_[i] - o.v_[i];
  return Character(lie_, std::move(v));
}

Character Character::operator-() const {
  std::vector<Rat> v(v_.size());
  for (std::size_t i = 0; i < v_.size(); ++i) v[i] = -v_[i];
  return Character(lie_, std::move(v));
}

bool Character::is_zero() const {
  for (auto& x : v_)
    if (x != 0) return false;
  return true;
}

std::string Character::str() const {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < v_.size(); ++i) {
    if (i) out << ", ";
    out << rat_str(v_[i]);
  }
  out << ")";
  return out.str();
}

Character trace_ad(const LieAlgebra& lie) {
  int m = lie.dim();
  std::vector<Rat> v(m, Rat(0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) v[i] += lie.bracket(i, j)[j];
  return Character(lie, std::move(v));
}

RepData::RepData(LieAlgebra lie, int N, std::vector<RatMatrix> matrices)
    : lie_(std::move(lie)), N_(N), rho_(std::move(matrices)) {
  if (N_ <= 0) throw ValidationError("representation dimension must be positive");
  if (static_cast<int>(rho_.size()) != lie_.dim())
    throw ValidationError("need one representation matrix per basis element");
  for (auto& M : rho_) {
    if (static_cast<int>(M.size()) != N_)
      throw ValidationError("representation matrix has wrong size");
    for (auto& row : M)
      if (static_cast<int>(row.size()) != N_)
        throw ValidationError("representation matrix has wrong size");
  }

  auto mul = [&](const RatMatrix& A, const RatMatrix& B) {
    RatMatrix C(N_, std::vector<Rat>(N_, Rat(0)));
    for (int i = 0; i < N_; ++i)
      for (int k = 0; k < N_; ++k) {
        if (A[i][k] == 0) continue;
        for (int j = 0; j < N_; ++j) C[i][j] += A[i][k] * B[k][j];
      }
    return C;
  };

  // drho must be a homomorphism: drho([xi_i,xi_j]) = [drho(xi_i), drho(xi_j)]
  int m = lie_.dim();
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      RatMatrix comm = mul(rho_[i], rho_[j]);
      RatMatrix ba = mul(rho_[j], rho_[i]);
      for (int r = 0; r < N_; ++r)
        for (int s = 0; s < N_; ++s) {
          comm[r][s] -= ba[r][s];
          Rat expect = 0;
          for (int k = 0; k < m; ++k) expect += lie_.bracket(i, j)[k] * rho_[k][r][s];
          if (comm[r][s] != expect) {
            std::ostringstream msg;
            msg << "representation matrices violate the bracket at (" << i + 1 << ","
                << j + 1 << "), entry (" << r + 1 << "," << s + 1 << ")";
            throw ValidationError(msg.str());
          }
        }
    }

  if (auto e = lie_.scaling_element()) {
    for (int r = 0; r < N_; ++r)
      for (int s = 0; s < N_; ++s)
        if (rho_[*e][r][s] != (r == s ? Rat(1) : Rat(0)))
          throw ValidationError("flagged scaling element must act as the identity");
  }
}

WeylElement RepData::vector_field(int j) const {
  if (j < 0 || j >= lie_.dim()) throw ValidationError("basis index out of range");
  WeylElement Z(N_);
  for (int k = 0; k < N_; ++k)
    for (int l = 0; l < N_; ++l) {
      if (rho_[j][k][l] == 0) continue;
      WeylKey key{Exps(N_, 0), Exps(N_, 0)};
      key.x[l] = 1;
      key.d[k] = 1;
      Z.add_term(key, -rho_[j][k][l]);
    }
  return Z;
}

Poly RepData::apply_field(int j, const Poly& f) const {
  if (f.nvars() != N_) throw ValidationError("polynomial has wrong ambient dimension");
  Poly out(N_);
  for (int k = 0; k < N_; ++k) {
    Poly df = f.derivative(k);
    if (df.is_zero()) continue;
    for (int l = 0; l < N_; ++l) {
      if (rho_[j][k][l] == 0) continue;
      out -= Poly::variable(N_, l) * df * rho_[j][k][l];
    }
  }
  return out;
}

Character RepData::trace_drho() const {
  std::vector<Rat> v(lie_.dim(), Rat(0));
  for (int j = 0; j < lie_.dim(); ++j)
    for (int i = 0; i < N_; ++i) v[j] += rho_[j][i][i];
  // Character construction re-checks vanishing on brackets; a failure there
  // means the matrices were not a homomorphism after all
  return Character(lie_, std::move(v));
}

Character RepData::beta_prime(const Character& beta) const {
  return trace_drho() - beta;
}

Character RepData::zero_character() const {
  return Character(lie_, std::vector<Rat>(lie_.dim(), Rat(0)));
}

Character RepData::character(std::vector<Rat> values) const {
  return Character(lie_, std::move(values));
}

}  // namespace taut
