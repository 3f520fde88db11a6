#include "horocalc/rational.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace horocalc {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows[0].size() : 0;
  RationalMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("ragged rows in matrix literal");
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Rational(static_cast<long>(rows[i][j]));
  }
  return m;
}

Rational& RationalMatrix::at(std::size_t i, std::size_t j) {
  return data_[i * cols_ + j];
}

const Rational& RationalMatrix::at(std::size_t i, std::size_t j) const {
  return data_[i * cols_ + j];
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matrix product shape mismatch");
  RationalMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) out.at(i, j) += a * other.at(k, j);
    }
  return out;
}

RationalMatrix RationalMatrix::hstack(const RationalMatrix& other) const {
  if (rows_ != other.rows_) throw std::invalid_argument("hstack row mismatch");
  RationalMatrix out(rows_, cols_ + other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
    for (std::size_t j = 0; j < other.cols_; ++j) out.at(i, cols_ + j) = other.at(i, j);
  }
  return out;
}

bool RationalMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x == 0; });
}

namespace {

// Row echelon in place; returns pivot columns.
std::vector<std::size_t> eliminate(RationalMatrix& m, bool reduce) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m.at(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(row, j));
    }
    const Rational inv = 1 / m.at(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
    const std::size_t start = reduce ? 0 : row + 1;
    for (std::size_t i = start; i < m.rows(); ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      const Rational f = m.at(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t RationalMatrix::rank() const {
  RationalMatrix work = *this;
  return eliminate(work, false).size();
}

RationalMatrix RationalMatrix::kernel() const {
  RationalMatrix work = *this;
  const std::vector<std::size_t> pivots = eliminate(work, true);

  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t p : pivots) is_pivot[p] = true;

  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < cols_; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);

  RationalMatrix basis(cols_, free_cols.size());
  for (std::size_t f = 0; f < free_cols.size(); ++f) {
    const std::size_t fc = free_cols[f];
    basis.at(fc, f) = 1;
    for (std::size_t p = 0; p < pivots.size(); ++p) {
      basis.at(pivots[p], f) = -work.at(p, fc);
    }
  }
  return basis;
}

RationalMatrix RationalMatrix::column_space_basis() const {
  RationalMatrix work = transpose();
  const std::vector<std::size_t> pivots = eliminate(work, true);
  RationalMatrix basis(rows_, pivots.size());
  for (std::size_t j = 0; j < pivots.size(); ++j)
    for (std::size_t i = 0; i < rows_; ++i) basis.at(i, j) = work.at(j, i);
  return basis;
}

std::string RationalMatrix::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < rows_; ++i) {
    out += '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out += ' ';
      out += at(i, j).get_str();
    }
    out += "]\n";
  }
  return out;
}

Subspace::Subspace(RationalMatrix basis) : basis_(std::move(basis)) {
  if (basis_.rank() != basis_.cols()) {
    throw std::invalid_argument("subspace basis columns are dependent");
  }
}

Subspace Subspace::zero(std::size_t ambient_dim) {
  return Subspace(RationalMatrix(ambient_dim, 0));
}

Subspace Subspace::span_of_columns(const RationalMatrix& generators) {
  return Subspace(generators.column_space_basis());
}

bool Subspace::contains_vector(const std::vector<Rational>& v) const {
  if (v.size() != ambient_dim()) throw std::invalid_argument("vector has wrong length");
  RationalMatrix col(ambient_dim(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) col.at(i, 0) = v[i];
  return basis_.hstack(col).rank() == dim();
}

bool Subspace::contains(const Subspace& other) const {
  if (ambient_dim() != other.ambient_dim()) throw std::invalid_argument("ambient mismatch");
  return basis_.hstack(other.basis()).rank() == dim();
}

Subspace Subspace::sum(const Subspace& other) const {
  if (ambient_dim() != other.ambient_dim()) throw std::invalid_argument("ambient mismatch");
  return span_of_columns(basis_.hstack(other.basis()));
}

std::size_t Subspace::intersection_dim(const Subspace& other) const {
  if (ambient_dim() != other.ambient_dim()) throw std::invalid_argument("ambient mismatch");
  const std::size_t sum_rank = basis_.hstack(other.basis()).rank();
  return dim() + other.dim() - sum_rank;
}

std::uint64_t SmallRng::next_u64() {
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

long long SmallRng::next_int(long long lo, long long hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long long>(next_u64() % span);
}

bool exists_nontrivial_nonneg_zero_combination(
    const std::vector<std::vector<long long>>& vectors) {
  const std::size_t n = vectors.size();
  if (n == 0) return false;
  const std::size_t d = vectors[0].size();
  for (const auto& v : vectors) {
    if (v.size() != d) throw std::invalid_argument("cone generators have mixed lengths");
    if (std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; })) return true;
  }

  // Feasibility of { lambda >= 0, V lambda = 0, sum lambda = 1 } via a
  // phase-one tableau.  m = d + 1 constraints, n structural + m artificial
  // columns, right-hand side (0,...,0,1).
  const std::size_t m = d + 1;
  RationalMatrix tab(m, n + m + 1);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < n; ++j) tab.at(i, j) = Rational(static_cast<long>(vectors[j][i]));
  for (std::size_t j = 0; j < n; ++j) tab.at(d, j) = 1;
  for (std::size_t i = 0; i < m; ++i) tab.at(i, n + i) = 1;
  tab.at(d, n + m) = 1;  // rhs

  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  // Reduced cost row for minimizing the sum of artificials: z_j = -sum of
  // constraint column j (artificial columns start at reduced cost 0).
  std::vector<Rational> zrow(n + m, Rational(0));
  Rational zval(0);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < m; ++i) zrow[j] -= tab.at(i, j);
  for (std::size_t i = 0; i < m; ++i) zval -= tab.at(i, n + m);

  while (true) {
    // Bland: smallest improving column.
    std::size_t enter = n + m;
    for (std::size_t j = 0; j < n + m; ++j) {
      if (zrow[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == n + m) break;

    std::size_t leave = m;
    Rational best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (tab.at(i, enter) > 0) {
        const Rational ratio = tab.at(i, n + m) / tab.at(i, enter);
        if (leave == m || ratio < best_ratio ||
            (ratio == best_ratio && basis[i] < basis[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
    }
    if (leave == m) break;  // unbounded; cannot happen for phase one

    const Rational pivot = tab.at(leave, enter);
    for (std::size_t j = 0; j <= n + m; ++j) tab.at(leave, j) /= pivot;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || tab.at(i, enter) == 0) continue;
      const Rational f = tab.at(i, enter);
      for (std::size_t j = 0; j <= n + m; ++j) tab.at(i, j) -= f * tab.at(leave, j);
    }
    const Rational fz = zrow[enter];
    if (fz != 0) {
      for (std::size_t j = 0; j < n + m; ++j) zrow[j] -= fz * tab.at(leave, j);
      zval -= fz * tab.at(leave, n + m);
    }
    basis[leave] = enter;
  }

  return zval == 0;  // artificials driven to zero <=> feasible
}

}  // namespace horocalc
