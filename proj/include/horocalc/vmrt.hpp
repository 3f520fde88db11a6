#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "horocalc/rational.hpp"

namespace horocalc {

// A (2m+1)-dimensional space with a skew form of rank 2m: m hyperbolic pairs
// (e_{2i-1}, e_{2i}) and a one-dimensional radical spanned by the last basis
// vector.
class SkewFormSpace {
 public:
  int m() const { return m_; }
  std::size_t dim() const { return static_cast<std::size_t>(2 * m_ + 1); }
  const RationalMatrix& form() const { return form_; }
  const Subspace& radical() const { return radical_; }

  // omega(v, w) for coordinate vectors.
  Rational pairing(const std::vector<Rational>& v, const std::vector<Rational>& w) const;

  friend SkewFormSpace standard_odd_symplectic(int m);

 private:
  int m_ = 0;
  RationalMatrix form_;
  Subspace radical_ = Subspace::zero(0);
};

// Requires m >= 2.
SkewFormSpace standard_odd_symplectic(int m);

// W^perp = {v : omega(v, W) = 0}; always contains the radical, and
// dim W^perp = (2m+1) - dim W + dim(W n R).
Subspace perp(const SkewFormSpace& sp, const Subspace& w);

bool is_isotropic(const SkewFormSpace& sp, const Subspace& w);

// A k-dimensional isotropic subspace, containing the radical exactly when
// requested; deterministic in the seed.  Feasible for k <= m+1 when the
// radical is included and k <= m otherwise.
Subspace random_isotropic(const SkewFormSpace& sp, int k, bool contains_radical,
                          std::uint64_t seed);

// Dimension of the space of lines through the fixed point inside the fiber
// over [V_{k-1}]: dim V_{k-1}^perp - k - 1.  Requires V_{k-1} a hyperplane of
// the isotropic V_k.
long long fiber_dim(const SkewFormSpace& sp, const Subspace& v_k, const Subspace& v_km1);

struct VmrtStratification {
  int m = 0;
  int k = 0;
  bool point_in_z = false;           // radical contained in V_k
  long long generic_fiber_dim = 0;   // 2m - 2k + 1
  std::optional<long long> jump_fiber_dim;  // 2m - 2k + 2, present iff point_in_z
  std::string jump_locus;            // "hyperplane {V_{k-1} >= R}" or "none"
  bool smooth = true;                // false iff a jump stratum exists
  long long samples_generic = 0;     // sampled hyperplanes off the jump locus
  long long samples_jump = 0;        // sampled hyperplanes on it
};

// Samples hyperplanes V_{k-1} of V_k and certifies the two canonical strata
// exactly (one hyperplane through the radical, one avoiding it) whenever the
// point lies on the closed orbit.  Requires V_k isotropic and 2 <= k <= m.
VmrtStratification stratify(const SkewFormSpace& sp, const Subspace& v_k, int samples,
                            std::uint64_t seed);

// dim of the variety of i-dimensional isotropic subspaces of a (2m+1)-dim
// space under a rank-2m skew form: i(2m+1-i) - i(i-1)/2.
long long odd_grassmannian_dim(int i, int m);

}  // namespace horocalc
