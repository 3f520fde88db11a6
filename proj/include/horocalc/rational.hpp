#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace horocalc {

using Rational = mpq_class;

// Dense matrix over Q.  All eliminations are fraction-free only in spirit:
// entries are canonical mpq values, so every rank/kernel verdict is exact.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_rows(const std::vector<std::vector<long long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j);
  const Rational& at(std::size_t i, std::size_t j) const;

  RationalMatrix transpose() const;
  RationalMatrix operator*(const RationalMatrix& other) const;
  RationalMatrix hstack(const RationalMatrix& other) const;

  bool is_zero() const;

  std::size_t rank() const;

  // Columns form a basis of the right null space {x : Ax = 0}.
  RationalMatrix kernel() const;

  // Reduced column basis of the column space (via RREF of the transpose).
  RationalMatrix column_space_basis() const;

  std::string to_string() const;  // diagnostics

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

// Subspace of Q^n presented by a basis matrix (columns independent).
class Subspace {
 public:
  // Throws if the columns are dependent.
  explicit Subspace(RationalMatrix basis);

  static Subspace zero(std::size_t ambient_dim);
  static Subspace span_of_columns(const RationalMatrix& generators);  // drops dependent columns

  std::size_t ambient_dim() const { return basis_.rows(); }
  std::size_t dim() const { return basis_.cols(); }
  const RationalMatrix& basis() const { return basis_; }

  bool contains_vector(const std::vector<Rational>& v) const;
  bool contains(const Subspace& other) const;
  Subspace sum(const Subspace& other) const;
  std::size_t intersection_dim(const Subspace& other) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  RationalMatrix basis_;
};

// Deterministic 64-bit generator (splitmix64); identical streams on every
// platform, unlike the standard distributions.
class SmallRng {
 public:
  explicit SmallRng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();
  // Uniform in [lo, hi] inclusive.
  long long next_int(long long lo, long long hi);

 private:
  std::uint64_t state_;
};

// True iff some nonzero lambda >= 0 has sum_i lambda_i * v_i = 0; i.e. the
// cone generated by the v_i contains a line (or a zero generator was given).
// Exact phase-one simplex with Bland's rule.
bool exists_nontrivial_nonneg_zero_combination(const std::vector<std::vector<long long>>& vectors);

}  // namespace horocalc
