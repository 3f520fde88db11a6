#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "horocalc/rational.hpp"

namespace horocalc {

// Split 7-dimensional quadratic space with distinguished basis
// (u_1, u_2, u_3, u'_1, u'_2, u'_3, e): U and U' are complementary maximal
// isotropic subspaces with b(u_i, u'_j) = delta_ij, and b(e, e) = 1.
class QuadraticSpace7 {
 public:
  static constexpr std::size_t kDim = 7;

  const RationalMatrix& form() const { return form_; }
  Rational pairing(const std::vector<Rational>& v, const std::vector<Rational>& w) const;

  Subspace u_space() const;       // span(u_1, u_2, u_3)
  Subspace u_dual_space() const;  // span(u'_1, u'_2, u'_3)

  friend QuadraticSpace7 standard_split_form7();

 private:
  RationalMatrix form_;
};

QuadraticSpace7 standard_split_form7();

// Spin module on the exterior algebra of U; coordinate S (a bitmask over
// {1,2,3}, bit i-1 for u_i) holds the coefficient of the ascending wedge of
// the selected u_i.
using SpinorVector = std::array<Rational, 8>;

// Clifford action of a vector (coordinates in the distinguished basis):
// u_i by exterior multiplication, u'_i by contraction against the pairing
// 2*b (so that acting twice multiplies by b(v, v)), e by the degree
// involution.
SpinorVector clifford_action(const std::vector<Rational>& v, const SpinorVector& s);

// 8x8 matrix of the action above.
RationalMatrix clifford_action_matrix(const std::vector<Rational>& v);

// The line of spinors annihilated by a 3-dimensional isotropic subspace,
// normalized so the first nonzero coordinate is 1.  Rejects non-isotropic or
// wrong-dimension input; a kernel of dimension != 1 signals an internal bug.
SpinorVector pure_spinor(const QuadraticSpace7& q, const Subspace& v3);

// Projective dimension of the span (rank of the coordinate matrix minus 1);
// rejects an all-zero family.
long long spinor_span_dim(const std::vector<SpinorVector>& spinors);

// The invariant symmetric pairing on the spin module; it vanishes on
// (s, s) exactly when s is a pure spinor, cutting out the quadric image of
// the isotropic-3-space family.
Rational spinor_pairing(const SpinorVector& s, const SpinorVector& t);

// Exact orthogonal complement {v : b(v, W) = 0}.
Subspace quadratic_perp(const QuadraticSpace7& q, const Subspace& w);

bool is_isotropic(const QuadraticSpace7& q, const Subspace& w);

// Random isometry of the split form (product of elementary isometries);
// deterministic in the generator state.
RationalMatrix random_isometry(const QuadraticSpace7& q, SmallRng& rng);

// Image of U under a random isometry.
Subspace random_isotropic_3space(const QuadraticSpace7& q, std::uint64_t seed);

// W + <v> for an isotropic v in W^perp \ W, found by exact search plus conic
// parametrization; requires W isotropic of dimension <= 2.
Subspace extend_isotropic(const QuadraticSpace7& q, const Subspace& w, SmallRng& rng);

struct Lemma45Line {
  std::vector<long long> line_coeffs;  // V_1 = span of this combination of the V_2 basis
  long long family_span_dim = -1;      // span of pure spinors of {isotropic V_3 >= V_1}
  bool contains_pencil = false;        // that span contains the pencil line
};

struct Lemma45Report {
  long long pencil_span_dim = -1;  // span of pure spinors of {isotropic V_3 >= V_2}
  std::vector<Lemma45Line> lines;
  long long clifford_samples = 0;  // random (v, s) pairs with v.v.s = b(v,v).s verified
  long long kernel_samples = 0;    // random isotropic 3-spaces with 1-dim annihilator
  bool all_pass = false;           // pencil dim 1, every family dim 3, every containment
};

// Certificate data for the pencil/family incidence through an isotropic
// plane V_2: the pencil of isotropic 3-spaces through V_2 spans a projective
// line of spinors, and for each sampled line V_1 in V_2 the isotropic
// 3-spaces through V_1 span a projective 3-space containing it.
Lemma45Report lemma45_check(const QuadraticSpace7& q, const Subspace& v2, int samples,
                            std::uint64_t seed);

}  // namespace horocalc
