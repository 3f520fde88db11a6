#include <doctest.h>

#include <stdexcept>

#include "horocalc/rational.hpp"

using namespace horocalc;

TEST_CASE("rank and kernel of small integer matrices") {
  const RationalMatrix m = RationalMatrix::from_rows({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}});
  CHECK(m.rank() == 2);
  const RationalMatrix ker = m.kernel();
  REQUIRE(ker.cols() == 1);
  CHECK((m * ker).is_zero());

  CHECK(RationalMatrix::identity(4).rank() == 4);
  CHECK(RationalMatrix(3, 5).rank() == 0);
  CHECK(RationalMatrix(3, 5).kernel().cols() == 5);
}

TEST_CASE("rank-nullity on random small matrices") {
  SmallRng rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t rows = static_cast<std::size_t>(rng.next_int(1, 6));
    const std::size_t cols = static_cast<std::size_t>(rng.next_int(1, 6));
    std::vector<std::vector<long long>> entries(rows, std::vector<long long>(cols));
    for (auto& row : entries)
      for (auto& x : row) x = rng.next_int(-4, 4);
    const RationalMatrix m = RationalMatrix::from_rows(entries);
    const RationalMatrix ker = m.kernel();
    CHECK(m.rank() + ker.cols() == cols);
    CHECK((m * ker).is_zero());
    CHECK(m.rank() == m.transpose().rank());
  }
}

TEST_CASE("column space basis spans the same space") {
  const RationalMatrix m = RationalMatrix::from_rows({{1, 1, 2}, {0, 1, 1}, {1, 0, 1}});
  const RationalMatrix basis = m.column_space_basis();
  CHECK(basis.cols() == 2);
  CHECK(basis.rank() == 2);
  CHECK(m.hstack(basis).rank() == 2);
}

TEST_CASE("subspace operations") {
  const RationalMatrix plane = RationalMatrix::from_rows({{1, 0}, {0, 1}, {0, 0}});
  const Subspace xy(plane);
  CHECK(xy.dim() == 2);
  CHECK(xy.contains_vector({Rational(1), Rational(2), Rational(0)}));
  CHECK_FALSE(xy.contains_vector({Rational(0), Rational(0), Rational(1)}));

  const Subspace x_axis(RationalMatrix::from_rows({{1}, {0}, {0}}));
  CHECK(xy.contains(x_axis));
  CHECK_FALSE(x_axis.contains(xy));

  const Subspace yz(RationalMatrix::from_rows({{0, 0}, {1, 0}, {0, 1}}));
  CHECK(xy.intersection_dim(yz) == 1);
  CHECK(xy.sum(yz).dim() == 3);

  CHECK_THROWS_AS(Subspace(RationalMatrix::from_rows({{1, 2}, {2, 4}})), std::invalid_argument);
  CHECK(Subspace::zero(5).dim() == 0);
}

TEST_CASE("strict convexity certificate") {
  SUBCASE("opposite rays are flagged") {
    CHECK(exists_nontrivial_nonneg_zero_combination({{1, 0}, {-1, 0}}));
  }
  SUBCASE("a simplicial cone is strictly convex") {
    CHECK_FALSE(exists_nontrivial_nonneg_zero_combination({{1, 0}, {0, 1}}));
    CHECK_FALSE(exists_nontrivial_nonneg_zero_combination({{1, 0}, {1, 1}, {0, 1}}));
  }
  SUBCASE("a half-plane needs three generators") {
    CHECK(exists_nontrivial_nonneg_zero_combination({{1, 0}, {-1, 1}, {-1, -1}}));
  }
  SUBCASE("empty generator list is the zero cone") {
    CHECK_FALSE(exists_nontrivial_nonneg_zero_combination({}));
  }
  SUBCASE("zero generator is degenerate") {
    CHECK(exists_nontrivial_nonneg_zero_combination({{0, 0}}));
  }
  SUBCASE("single rays in rank one") {
    CHECK_FALSE(exists_nontrivial_nonneg_zero_combination({{1}}));
    CHECK_FALSE(exists_nontrivial_nonneg_zero_combination({{-2}}));
    CHECK(exists_nontrivial_nonneg_zero_combination({{1}, {-1}}));
  }
}

namespace {

// Independent oracle for the simplex verdict: zero is a nontrivial
// nonnegative combination iff it is a convex combination of some subset of
// at most d+1 generators with a unique solution (Caratheodory), so
// enumerate those subsets and solve each small system exactly.
bool zero_combo_by_enumeration(const std::vector<std::vector<long long>>& vectors) {
  const std::size_t n = vectors.size();
  if (n == 0) return false;
  const std::size_t d = vectors[0].size();

  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) subset.push_back(i);
    if (subset.size() > d + 1) continue;

    // rows: coordinates of the chosen generators plus the normalization row
    RationalMatrix system(d + 1, subset.size() + 1);
    for (std::size_t c = 0; c < subset.size(); ++c) {
      for (std::size_t r = 0; r < d; ++r) {
        system.at(r, c) = Rational(static_cast<long>(vectors[subset[c]][r]));
      }
      system.at(d, c) = 1;
    }
    system.at(d, subset.size()) = 1;  // rhs of the normalization

    // unique solvability: coefficient rank = augmented rank = #unknowns
    RationalMatrix coeff(d + 1, subset.size());
    for (std::size_t r = 0; r < d + 1; ++r)
      for (std::size_t c = 0; c < subset.size(); ++c) coeff.at(r, c) = system.at(r, c);
    if (coeff.rank() != subset.size()) continue;
    if (system.rank() != subset.size()) continue;  // inconsistent

    // read the unique solution off the kernel line of [A | -b]
    RationalMatrix homog(d + 1, subset.size() + 1);
    for (std::size_t r = 0; r < d + 1; ++r) {
      for (std::size_t c = 0; c < subset.size(); ++c) homog.at(r, c) = system.at(r, c);
      homog.at(r, subset.size()) = -(r == d ? Rational(1) : Rational(0));
    }
    const RationalMatrix ker = homog.kernel();
    if (ker.cols() != 1 || ker.at(subset.size(), 0) == 0) continue;
    bool nonneg = true;
    for (std::size_t c = 0; c < subset.size(); ++c) {
      if (ker.at(c, 0) / ker.at(subset.size(), 0) < 0) nonneg = false;
    }
    if (nonneg) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("simplex verdict agrees with subset enumeration") {
  SmallRng rng(2718);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t d = static_cast<std::size_t>(rng.next_int(1, 3));
    const std::size_t n = static_cast<std::size_t>(rng.next_int(1, 5));
    std::vector<std::vector<long long>> vectors(n, std::vector<long long>(d));
    bool has_zero = false;
    for (auto& v : vectors) {
      bool zero = true;
      for (auto& x : v) {
        x = rng.next_int(-2, 2);
        zero = zero && x == 0;
      }
      has_zero = has_zero || zero;
    }
    if (has_zero) continue;  // rejected upstream as degenerate input
    CAPTURE(trial);
    CHECK(exists_nontrivial_nonneg_zero_combination(vectors) ==
          zero_combo_by_enumeration(vectors));
  }
}

TEST_CASE("deterministic rng streams") {
  SmallRng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next_int(-5, 5) == b.next_int(-5, 5));
  SmallRng c(42);
  for (int i = 0; i < 100; ++i) {
    const long long x = c.next_int(-5, 5);
    CHECK(x >= -5);
    CHECK(x <= 5);
  }
}
