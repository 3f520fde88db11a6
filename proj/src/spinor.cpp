#include "horocalc/spinor.hpp"

#include <bit>
#include <stdexcept>

namespace horocalc {

namespace {

constexpr std::size_t kSpin = 8;

int sign_below(unsigned mask, int i) {  // (-1)^{#bits of mask below bit i}
  const unsigned below = mask & ((1u << i) - 1u);
  return std::popcount(below) % 2 == 0 ? 1 : -1;
}

// Coefficient of s_S t_{S^c} in the invariant pairing, indexed by bitmask:
// the reversal twist (-1)^{deg(deg+1)/2} times the shuffle sign of (S, S^c).
constexpr int kPairingSign[kSpin] = {+1, -1, +1, -1, -1, +1, -1, +1};

std::vector<Rational> column_vector(const RationalMatrix& m, std::size_t j) {
  std::vector<Rational> v(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) v[i] = m.at(i, j);
  return v;
}

RationalMatrix column_from(const std::vector<Rational>& v) {
  RationalMatrix col(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) col.at(i, 0) = v[i];
  return col;
}

std::vector<Rational> matrix_times(const RationalMatrix& m, const std::vector<Rational>& v) {
  std::vector<Rational> out(m.rows(), Rational(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m.at(i, j) * v[j];
  return out;
}

}  // namespace

Rational QuadraticSpace7::pairing(const std::vector<Rational>& v,
                                  const std::vector<Rational>& w) const {
  if (v.size() != kDim || w.size() != kDim) {
    throw std::invalid_argument("pairing: vectors must have length 7");
  }
  Rational out(0);
  for (std::size_t i = 0; i < kDim; ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < kDim; ++j) out += v[i] * form_.at(i, j) * w[j];
  }
  return out;
}

Subspace QuadraticSpace7::u_space() const {
  RationalMatrix b(kDim, 3);
  for (std::size_t i = 0; i < 3; ++i) b.at(i, i) = 1;
  return Subspace(std::move(b));
}

Subspace QuadraticSpace7::u_dual_space() const {
  RationalMatrix b(kDim, 3);
  for (std::size_t i = 0; i < 3; ++i) b.at(3 + i, i) = 1;
  return Subspace(std::move(b));
}

QuadraticSpace7 standard_split_form7() {
  QuadraticSpace7 q;
  q.form_ = RationalMatrix(QuadraticSpace7::kDim, QuadraticSpace7::kDim);
  for (std::size_t i = 0; i < 3; ++i) {
    q.form_.at(i, 3 + i) = 1;
    q.form_.at(3 + i, i) = 1;
  }
  q.form_.at(6, 6) = 1;
  return q;
}

SpinorVector clifford_action(const std::vector<Rational>& v, const SpinorVector& s) {
  if (v.size() != QuadraticSpace7::kDim) {
    throw std::invalid_argument("clifford_action: vector must have length 7");
  }
  SpinorVector out;
  out.fill(Rational(0));
  for (unsigned mask = 0; mask < kSpin; ++mask) {
    if (s[mask] == 0) continue;
    for (int i = 0; i < 3; ++i) {
      const Rational& a = v[static_cast<std::size_t>(i)];
      if (a != 0 && !(mask & (1u << i))) {
        out[mask | (1u << i)] += a * sign_below(mask, i) * s[mask];
      }
      const Rational& b = v[static_cast<std::size_t>(3 + i)];
      if (b != 0 && (mask & (1u << i))) {
        out[mask & ~(1u << i)] += 2 * b * sign_below(mask, i) * s[mask];
      }
    }
    const Rational& c = v[6];
    if (c != 0) {
      const int deg_sign = std::popcount(mask) % 2 == 0 ? 1 : -1;
      out[mask] += c * deg_sign * s[mask];
    }
  }
  return out;
}

RationalMatrix clifford_action_matrix(const std::vector<Rational>& v) {
  RationalMatrix m(kSpin, kSpin);
  for (std::size_t j = 0; j < kSpin; ++j) {
    SpinorVector basis;
    basis.fill(Rational(0));
    basis[j] = 1;
    const SpinorVector image = clifford_action(v, basis);
    for (std::size_t i = 0; i < kSpin; ++i) m.at(i, j) = image[i];
  }
  return m;
}

bool is_isotropic(const QuadraticSpace7& q, const Subspace& w) {
  if (w.ambient_dim() != QuadraticSpace7::kDim) {
    throw std::invalid_argument("is_isotropic: subspace lives in the wrong ambient space");
  }
  return (w.basis().transpose() * q.form() * w.basis()).is_zero();
}

Subspace quadratic_perp(const QuadraticSpace7& q, const Subspace& w) {
  if (w.ambient_dim() != QuadraticSpace7::kDim) {
    throw std::invalid_argument("quadratic_perp: subspace lives in the wrong ambient space");
  }
  return Subspace((w.basis().transpose() * q.form()).kernel());
}

SpinorVector pure_spinor(const QuadraticSpace7& q, const Subspace& v3) {
  if (v3.ambient_dim() != QuadraticSpace7::kDim || v3.dim() != 3) {
    throw std::invalid_argument("pure_spinor: expected a 3-dimensional subspace of Q^7");
  }
  if (!is_isotropic(q, v3)) {
    throw std::invalid_argument("pure_spinor: subspace is not isotropic");
  }

  RationalMatrix stacked(3 * kSpin, kSpin);
  for (std::size_t c = 0; c < 3; ++c) {
    const RationalMatrix action = clifford_action_matrix(column_vector(v3.basis(), c));
    for (std::size_t i = 0; i < kSpin; ++i)
      for (std::size_t j = 0; j < kSpin; ++j) stacked.at(c * kSpin + i, j) = action.at(i, j);
  }
  const RationalMatrix ker = stacked.kernel();
  if (ker.cols() != 1) {
    throw std::logic_error("pure_spinor: annihilator has dimension " +
                           std::to_string(ker.cols()) + ", expected 1");
  }

  SpinorVector s;
  s.fill(Rational(0));
  Rational lead(0);
  for (std::size_t i = 0; i < kSpin; ++i) {
    if (lead == 0 && ker.at(i, 0) != 0) lead = ker.at(i, 0);
  }
  for (std::size_t i = 0; i < kSpin; ++i) s[i] = ker.at(i, 0) / lead;
  return s;
}

long long spinor_span_dim(const std::vector<SpinorVector>& spinors) {
  if (spinors.empty()) throw std::invalid_argument("spinor_span_dim: empty list");
  RationalMatrix m(kSpin, spinors.size());
  for (std::size_t j = 0; j < spinors.size(); ++j)
    for (std::size_t i = 0; i < kSpin; ++i) m.at(i, j) = spinors[j][i];
  const std::size_t r = m.rank();
  if (r == 0) throw std::invalid_argument("spinor_span_dim: all spinors are zero");
  return static_cast<long long>(r) - 1;
}

Rational spinor_pairing(const SpinorVector& s, const SpinorVector& t) {
  Rational out(0);
  for (unsigned mask = 0; mask < kSpin; ++mask) {
    out += kPairingSign[mask] * s[mask] * t[7u ^ mask];
  }
  return out;
}

RationalMatrix random_isometry(const QuadraticSpace7&, SmallRng& rng) {
  constexpr std::size_t n = QuadraticSpace7::kDim;
  RationalMatrix g = RationalMatrix::identity(n);

  const int steps = 8 + static_cast<int>(rng.next_int(0, 4));
  for (int step = 0; step < steps; ++step) {
    RationalMatrix el = RationalMatrix::identity(n);
    const long long kind = rng.next_int(0, 3);
    if (kind == 0) {
      // u_i += t u_j, compensated on the dual side.
      const std::size_t i = static_cast<std::size_t>(rng.next_int(0, 2));
      std::size_t j = static_cast<std::size_t>(rng.next_int(0, 2));
      if (j == i) j = (j + 1) % 3;
      const Rational t(static_cast<long>(rng.next_int(-2, 2)));
      el.at(j, i) = t;
      el.at(3 + i, 3 + j) = -t;
    } else if (kind == 1) {
      // u_i <-> u'_i.
      const std::size_t i = static_cast<std::size_t>(rng.next_int(0, 2));
      el.at(i, i) = 0;
      el.at(3 + i, 3 + i) = 0;
      el.at(3 + i, i) = 1;
      el.at(i, 3 + i) = 1;
    } else if (kind == 2) {
      // u_i *= c, u'_i /= c.
      const std::size_t i = static_cast<std::size_t>(rng.next_int(0, 2));
      const Rational c(static_cast<long>(rng.next_int(1, 3)));
      el.at(i, i) = c;
      el.at(3 + i, 3 + i) = 1 / c;
    } else {
      // e -> e + t u_i, u'_i -> u'_i - t e - (t^2/2) u_i.
      const std::size_t i = static_cast<std::size_t>(rng.next_int(0, 2));
      const Rational t(static_cast<long>(rng.next_int(-2, 2)));
      el.at(i, 6) = t;
      el.at(6, 3 + i) = -t;
      el.at(i, 3 + i) = -t * t / 2;
    }
    g = g * el;
  }
  return g;
}

Subspace random_isotropic_3space(const QuadraticSpace7& q, std::uint64_t seed) {
  SmallRng rng(seed);
  const RationalMatrix g = random_isometry(q, rng);
  RationalMatrix basis(QuadraticSpace7::kDim, 3);
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t i = 0; i < QuadraticSpace7::kDim; ++i) basis.at(i, j) = g.at(i, j);
  return Subspace(std::move(basis));
}

namespace {

// Deterministic search for an isotropic vector of the split form inside
// P \ W, scanning small coordinate boxes over the basis of P.
std::vector<Rational> find_isotropic_off(const QuadraticSpace7& q, const Subspace& p,
                                         const Subspace& w) {
  const std::size_t r = p.dim();
  for (long long box = 1; box <= 2; ++box) {
    std::vector<long long> x(r, -box);
    while (true) {
      bool all_zero = true;
      for (long long c : x) all_zero = all_zero && c == 0;
      if (!all_zero) {
        std::vector<Rational> xr(r);
        for (std::size_t i = 0; i < r; ++i) xr[i] = Rational(static_cast<long>(x[i]));
        std::vector<Rational> v = matrix_times(p.basis(), xr);
        if (q.pairing(v, v) == 0 && !w.contains_vector(v)) return v;
      }
      std::size_t pos = 0;
      while (pos < r && x[pos] == box) {
        x[pos] = -box;
        ++pos;
      }
      if (pos == r) break;
      ++x[pos];
    }
  }
  throw std::runtime_error("no small isotropic vector found outside the given subspace");
}

}  // namespace

Subspace extend_isotropic(const QuadraticSpace7& q, const Subspace& w, SmallRng& rng) {
  if (!is_isotropic(q, w) || w.dim() > 2) {
    throw std::invalid_argument("extend_isotropic: need an isotropic subspace of dim <= 2");
  }
  const Subspace p = quadratic_perp(q, w);
  const std::vector<Rational> base = find_isotropic_off(q, p, w);

  // Conic parametrization through the base point: for h in W^perp the vector
  // b(h,h) base - 2 b(base,h) h is again isotropic.
  for (int attempt = 0; attempt < 32; ++attempt) {
    std::vector<Rational> h(p.dim());
    for (auto& c : h) c = Rational(static_cast<long>(rng.next_int(-3, 3)));
    const std::vector<Rational> hv = matrix_times(p.basis(), h);
    const Rational hh = q.pairing(hv, hv);
    const Rational bh = q.pairing(base, hv);
    std::vector<Rational> v(QuadraticSpace7::kDim);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = hh * base[i] - 2 * bh * hv[i];
    bool zero = true;
    for (const auto& c : v) zero = zero && c == 0;
    if (zero || w.contains_vector(v)) continue;
    return Subspace::span_of_columns(w.basis().hstack(column_from(v)));
  }
  return Subspace::span_of_columns(w.basis().hstack(column_from(base)));
}

Lemma45Report lemma45_check(const QuadraticSpace7& q, const Subspace& v2, int samples,
                            std::uint64_t seed) {
  if (v2.ambient_dim() != QuadraticSpace7::kDim || v2.dim() != 2) {
    throw std::invalid_argument("lemma45_check: V_2 must be 2-dimensional in Q^7");
  }
  if (!is_isotropic(q, v2)) {
    throw std::invalid_argument("lemma45_check: V_2 is not isotropic");
  }
  if (samples < 1) throw std::invalid_argument("lemma45_check: need at least one line");

  SmallRng rng(seed);
  Lemma45Report report;

  constexpr int kPencilMembers = 6;
  constexpr int kFamilyMembers = 12;

  auto distinct_append = [](std::vector<Subspace>& list, Subspace s) {
    for (const Subspace& t : list) {
      if (t.dim() == s.dim() && t.contains(s)) return;
    }
    list.push_back(std::move(s));
  };

  // Pencil of isotropic 3-spaces through V_2; its spinors trace out the line.
  std::vector<Subspace> pencil;
  for (int tries = 0; tries < 8 * kPencilMembers && static_cast<int>(pencil.size()) < kPencilMembers;
       ++tries) {
    distinct_append(pencil, extend_isotropic(q, v2, rng));
  }
  std::vector<SpinorVector> pencil_spinors;
  for (const Subspace& v3 : pencil) pencil_spinors.push_back(pure_spinor(q, v3));
  report.pencil_span_dim = spinor_span_dim(pencil_spinors);

  RationalMatrix pencil_mat(kSpin, pencil_spinors.size());
  for (std::size_t j = 0; j < pencil_spinors.size(); ++j)
    for (std::size_t i = 0; i < kSpin; ++i) pencil_mat.at(i, j) = pencil_spinors[j][i];

  // Sampled lines V_1 in V_2: distinct projective points with small
  // coordinates, always including the two basis lines.
  std::vector<std::vector<long long>> line_coeffs = {{1, 0}, {0, 1}};
  while (static_cast<int>(line_coeffs.size()) < samples) {
    const long long a = rng.next_int(-4, 4);
    const long long b = rng.next_int(-4, 4);
    if (a == 0 && b == 0) continue;
    bool fresh = true;
    for (const auto& c : line_coeffs) fresh = fresh && (c[0] * b - c[1] * a) != 0;
    if (fresh) line_coeffs.push_back({a, b});
  }
  if (static_cast<int>(line_coeffs.size()) > samples && samples >= 2) {
    line_coeffs.resize(static_cast<std::size_t>(samples));
  }

  bool all_pass = report.pencil_span_dim == 1;
  for (const auto& coeffs : line_coeffs) {
    std::vector<Rational> dir(QuadraticSpace7::kDim, Rational(0));
    const Rational a(static_cast<long>(coeffs[0])), b(static_cast<long>(coeffs[1]));
    for (std::size_t i = 0; i < QuadraticSpace7::kDim; ++i) {
      dir[i] = a * v2.basis().at(i, 0) + b * v2.basis().at(i, 1);
    }
    const Subspace v1 = Subspace(column_from(dir));

    std::vector<Subspace> family;
    for (int tries = 0;
         tries < 8 * kFamilyMembers && static_cast<int>(family.size()) < kFamilyMembers;
         ++tries) {
      if (tries % 3 == 2) {
        // Members through all of V_2 also pass through V_1.
        distinct_append(family, extend_isotropic(q, v2, rng));
      } else {
        distinct_append(family, extend_isotropic(q, extend_isotropic(q, v1, rng), rng));
      }
    }

    std::vector<SpinorVector> family_spinors;
    for (const Subspace& v3 : family) family_spinors.push_back(pure_spinor(q, v3));

    RationalMatrix family_mat(kSpin, family_spinors.size());
    for (std::size_t j = 0; j < family_spinors.size(); ++j)
      for (std::size_t i = 0; i < kSpin; ++i) family_mat.at(i, j) = family_spinors[j][i];

    Lemma45Line line;
    line.line_coeffs = coeffs;
    line.family_span_dim = spinor_span_dim(family_spinors);
    line.contains_pencil = family_mat.hstack(pencil_mat).rank() == family_mat.rank();
    all_pass = all_pass && line.family_span_dim == 3 && line.contains_pencil;
    report.lines.push_back(std::move(line));
  }

  // Clifford relation v.v.s = b(v,v).s on random pairs, and the
  // one-dimensionality of the annihilator on random isotropic 3-spaces
  // (pure_spinor throws if the latter ever fails).
  constexpr int kPropertySamples = 100;
  for (int t = 0; t < kPropertySamples; ++t) {
    std::vector<Rational> v(QuadraticSpace7::kDim);
    for (auto& c : v) c = Rational(static_cast<long>(rng.next_int(-3, 3)));
    SpinorVector s;
    for (auto& c : s) c = Rational(static_cast<long>(rng.next_int(-3, 3)));
    const SpinorVector twice = clifford_action(v, clifford_action(v, s));
    const Rational norm = q.pairing(v, v);
    for (std::size_t i = 0; i < kSpin; ++i) {
      if (twice[i] != norm * s[i]) {
        throw std::logic_error("Clifford relation failed on a sampled pair");
      }
    }
    ++report.clifford_samples;
  }
  for (int t = 0; t < kPropertySamples; ++t) {
    const Subspace v3 = random_isotropic_3space(q, rng.next_u64());
    const SpinorVector s = pure_spinor(q, v3);
    if (spinor_pairing(s, s) != 0) {
      throw std::logic_error("pure spinor escapes the invariant quadric");
    }
    ++report.kernel_samples;
  }

  report.all_pass = all_pass;
  return report;
}

}  // namespace horocalc
