#include "horocalc/vmrt.hpp"

#include <stdexcept>

namespace horocalc {

namespace {

std::vector<Rational> random_small_vector(SmallRng& rng, std::size_t n) {
  std::vector<Rational> v(n);
  for (auto& x : v) x = Rational(static_cast<long>(rng.next_int(-3, 3)));
  return v;
}

RationalMatrix column_from(const std::vector<Rational>& v) {
  RationalMatrix col(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) col.at(i, 0) = v[i];
  return col;
}

std::vector<Rational> matrix_times(const RationalMatrix& m, const std::vector<Rational>& v) {
  if (m.cols() != v.size()) throw std::invalid_argument("shape mismatch");
  std::vector<Rational> out(m.rows(), Rational(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m.at(i, j) * v[j];
  return out;
}

}  // namespace

Rational SkewFormSpace::pairing(const std::vector<Rational>& v,
                                const std::vector<Rational>& w) const {
  if (v.size() != dim() || w.size() != dim()) {
    throw std::invalid_argument("pairing: vector length must be " + std::to_string(dim()));
  }
  Rational out(0);
  for (std::size_t i = 0; i < dim(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j) out += v[i] * form_.at(i, j) * w[j];
  }
  return out;
}

SkewFormSpace standard_odd_symplectic(int m) {
  if (m < 2) throw std::invalid_argument("standard_odd_symplectic requires m >= 2");
  SkewFormSpace sp;
  sp.m_ = m;
  const std::size_t n = sp.dim();
  sp.form_ = RationalMatrix(n, n);
  for (std::size_t i = 0; i < static_cast<std::size_t>(m); ++i) {
    sp.form_.at(2 * i, 2 * i + 1) = 1;
    sp.form_.at(2 * i + 1, 2 * i) = -1;
  }
  RationalMatrix rad(n, 1);
  rad.at(n - 1, 0) = 1;
  sp.radical_ = Subspace(std::move(rad));
  return sp;
}

Subspace perp(const SkewFormSpace& sp, const Subspace& w) {
  if (w.ambient_dim() != sp.dim()) {
    throw std::invalid_argument("perp: subspace lives in the wrong ambient space");
  }
  // Rows omega(w_j, -); the kernel is W^perp.
  const RationalMatrix rows = w.basis().transpose() * sp.form();
  return Subspace(rows.kernel());
}

bool is_isotropic(const SkewFormSpace& sp, const Subspace& w) {
  if (w.ambient_dim() != sp.dim()) {
    throw std::invalid_argument("is_isotropic: subspace lives in the wrong ambient space");
  }
  return (w.basis().transpose() * sp.form() * w.basis()).is_zero();
}

Subspace random_isotropic(const SkewFormSpace& sp, int k, bool contains_radical,
                          std::uint64_t seed) {
  const int max_dim = contains_radical ? sp.m() + 1 : sp.m();
  if (k < 1 || k > max_dim) {
    throw std::invalid_argument("random_isotropic: no isotropic subspace of dimension " +
                                std::to_string(k) +
                                (contains_radical ? " containing" : " avoiding") +
                                " the radical (feasible range 1.." + std::to_string(max_dim) +
                                ")");
  }

  SmallRng rng(seed);
  Subspace w = contains_radical ? sp.radical() : Subspace::zero(sp.dim());
  while (w.dim() < static_cast<std::size_t>(k)) {
    // Any vector of W^perp extends W isotropically; the form is skew, so
    // omega(v, v) = 0 needs no check.
    const Subspace p = perp(sp, w);
    const std::vector<Rational> v =
        matrix_times(p.basis(), random_small_vector(rng, p.dim()));
    if (w.contains_vector(v)) continue;
    Subspace extended = Subspace::span_of_columns(w.basis().hstack(column_from(v)));
    if (!contains_radical && extended.intersection_dim(sp.radical()) > 0) continue;
    w = std::move(extended);
  }
  return w;
}

long long fiber_dim(const SkewFormSpace& sp, const Subspace& v_k, const Subspace& v_km1) {
  if (!is_isotropic(sp, v_k)) throw std::invalid_argument("fiber_dim: V_k is not isotropic");
  if (v_km1.dim() + 1 != v_k.dim() || !v_k.contains(v_km1)) {
    throw std::invalid_argument("fiber_dim: V_{k-1} must be a hyperplane of V_k");
  }
  const long long k = static_cast<long long>(v_k.dim());
  return static_cast<long long>(perp(sp, v_km1).dim()) - k - 1;
}

namespace {

// Hyperplane of v_k cut out by a random functional, as a subspace of the
// ambient space.
Subspace random_hyperplane(const Subspace& v_k, SmallRng& rng) {
  const std::size_t k = v_k.dim();
  while (true) {
    RationalMatrix functional(1, k);
    bool nonzero = false;
    for (std::size_t j = 0; j < k; ++j) {
      functional.at(0, j) = Rational(static_cast<long>(rng.next_int(-3, 3)));
      nonzero = nonzero || functional.at(0, j) != 0;
    }
    if (!nonzero) continue;
    return Subspace(v_k.basis() * functional.kernel());
  }
}

}  // namespace

VmrtStratification stratify(const SkewFormSpace& sp, const Subspace& v_k, int samples,
                            std::uint64_t seed) {
  const int k = static_cast<int>(v_k.dim());
  if (k < 2 || k > sp.m()) {
    throw std::invalid_argument("stratify requires 2 <= k <= m (got k=" + std::to_string(k) +
                                ", m=" + std::to_string(sp.m()) + ")");
  }
  if (!is_isotropic(sp, v_k)) throw std::invalid_argument("stratify: V_k is not isotropic");

  VmrtStratification out;
  out.m = sp.m();
  out.k = k;
  out.point_in_z = v_k.contains(sp.radical());

  // Off the closed orbit there are no canonical representatives, so at least
  // one sampled hyperplane is needed.
  if (samples < (out.point_in_z ? 0 : 1)) {
    throw std::invalid_argument("stratify: sample count too small");
  }

  std::vector<Subspace> hyperplanes;

  if (out.point_in_z) {
    // Canonical representatives of the two strata.  The reduced column basis
    // of V_k is in echelon order, so the radical direction (supported on the
    // last coordinate) lands in the last column: dropping it gives the
    // hyperplane avoiding R, keeping it gives the one through R.
    const RationalMatrix adapted = v_k.basis().column_space_basis();
    RationalMatrix avoiding(sp.dim(), static_cast<std::size_t>(k - 1));
    RationalMatrix through(sp.dim(), static_cast<std::size_t>(k - 1));
    for (std::size_t i = 0; i < sp.dim(); ++i) {
      for (int j = 0; j < k - 1; ++j) {
        avoiding.at(i, static_cast<std::size_t>(j)) = adapted.at(i, static_cast<std::size_t>(j));
        through.at(i, static_cast<std::size_t>(j)) =
            adapted.at(i, static_cast<std::size_t>(j + 1));
      }
    }
    Subspace through_sub(std::move(through));
    Subspace avoiding_sub(std::move(avoiding));
    if (!through_sub.contains(sp.radical()) || avoiding_sub.intersection_dim(sp.radical()) != 0) {
      throw std::logic_error("canonical stratum representatives are misaligned");
    }
    hyperplanes.push_back(std::move(through_sub));
    hyperplanes.push_back(std::move(avoiding_sub));
  }

  SmallRng rng(seed);
  for (int s = 0; s < samples; ++s) hyperplanes.push_back(random_hyperplane(v_k, rng));

  std::optional<long long> generic_dim, jump_dim;
  for (const Subspace& h : hyperplanes) {
    const bool through_radical = h.contains(sp.radical());
    const long long d = fiber_dim(sp, v_k, h);
    if (through_radical) {
      if (!out.point_in_z) throw std::logic_error("hyperplane through R at a point off Z");
      if (jump_dim && *jump_dim != d) throw std::logic_error("inconsistent jump fiber dims");
      jump_dim = d;
      ++out.samples_jump;
    } else {
      if (generic_dim && *generic_dim != d) throw std::logic_error("inconsistent fiber dims");
      generic_dim = d;
      ++out.samples_generic;
    }
  }

  if (!generic_dim) throw std::logic_error("no hyperplane off the jump locus was sampled");
  out.generic_fiber_dim = *generic_dim;
  out.jump_fiber_dim = jump_dim;
  out.smooth = !jump_dim.has_value();
  out.jump_locus = jump_dim ? "hyperplane {V_{k-1} >= R}" : "none";
  if (out.point_in_z != jump_dim.has_value()) {
    throw std::logic_error("jump stratum presence disagrees with radical containment");
  }
  return out;
}

long long odd_grassmannian_dim(int i, int m) {
  if (m < 2 || i < 1 || i > m + 1) {
    throw std::invalid_argument("odd_grassmannian_dim requires m >= 2 and 1 <= i <= m+1");
  }
  const long long li = i, lm = m;
  return li * (2 * lm + 1 - li) - li * (li - 1) / 2;
}

}  // namespace horocalc
