#include <doctest.h>

#include <stdexcept>

#include "horocalc/spinor.hpp"

using namespace horocalc;

namespace {

std::vector<Rational> basis_vector(std::size_t i) {
  std::vector<Rational> v(QuadraticSpace7::kDim, Rational(0));
  v[i] = 1;
  return v;
}

SpinorVector basis_spinor(unsigned mask) {
  SpinorVector s;
  s.fill(Rational(0));
  s[mask] = 1;
  return s;
}

Subspace standard_v2() {
  RationalMatrix basis(QuadraticSpace7::kDim, 2);
  basis.at(0, 0) = 1;
  basis.at(1, 1) = 1;
  return Subspace(std::move(basis));
}

}  // namespace

TEST_CASE("standard split form") {
  const QuadraticSpace7 q = standard_split_form7();
  CHECK(q.pairing(basis_vector(0), basis_vector(3)) == 1);  // b(u_1, u'_1)
  CHECK(q.pairing(basis_vector(0), basis_vector(4)) == 0);  // b(u_1, u'_2)
  CHECK(q.pairing(basis_vector(6), basis_vector(6)) == 1);  // b(e, e)
  for (std::size_t i = 0; i < 6; ++i) CHECK(q.pairing(basis_vector(6), basis_vector(i)) == 0);
  CHECK(q.form().rank() == 7);
  CHECK(is_isotropic(q, q.u_space()));
  CHECK(is_isotropic(q, q.u_dual_space()));
}

TEST_CASE("clifford action on basis spinors") {
  // u_1 wedges onto the vacuum
  const SpinorVector u1_vac = clifford_action(basis_vector(0), basis_spinor(0));
  CHECK(u1_vac[0b001] == 1);

  // u'_1 contracts u_1 back to the vacuum (pairing convention scales by 2)
  const SpinorVector contr = clifford_action(basis_vector(3), basis_spinor(0b001));
  CHECK(contr[0] == 2);

  // e flips the sign on odd degrees
  const SpinorVector deg = clifford_action(basis_vector(6), basis_spinor(0b011));
  CHECK(deg[0b011] == 1);
  const SpinorVector deg1 = clifford_action(basis_vector(6), basis_spinor(0b100));
  CHECK(deg1[0b100] == -1);
}

TEST_CASE("clifford relation v.v.s = b(v,v) s on random samples") {
  const QuadraticSpace7 q = standard_split_form7();
  SmallRng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Rational> v(QuadraticSpace7::kDim);
    for (auto& c : v) c = Rational(static_cast<long>(rng.next_int(-4, 4)));
    SpinorVector s;
    for (auto& c : s) c = Rational(static_cast<long>(rng.next_int(-4, 4)));
    const SpinorVector twice = clifford_action(v, clifford_action(v, s));
    const Rational norm = q.pairing(v, v);
    for (std::size_t i = 0; i < 8; ++i) CHECK(twice[i] == norm * s[i]);
  }
}

TEST_CASE("pure spinors of the distinguished isotropic spaces") {
  const QuadraticSpace7 q = standard_split_form7();
  // U acts by wedging, so its annihilator line is the top wedge; the dual
  // space contracts, leaving the vacuum.
  const SpinorVector top = pure_spinor(q, q.u_space());
  CHECK(top == basis_spinor(0b111));
  const SpinorVector vac = pure_spinor(q, q.u_dual_space());
  CHECK(vac == basis_spinor(0));
}

TEST_CASE("pure spinor rejections") {
  const QuadraticSpace7 q = standard_split_form7();
  CHECK_THROWS_AS(pure_spinor(q, standard_v2()), std::invalid_argument);  // wrong dim
  RationalMatrix bad(QuadraticSpace7::kDim, 3);
  bad.at(0, 0) = 1;  // u_1
  bad.at(3, 1) = 1;  // u'_1: pairs with u_1
  bad.at(2, 2) = 1;
  CHECK_THROWS_AS(pure_spinor(q, Subspace(std::move(bad))), std::invalid_argument);
}

TEST_CASE("kernel dimension one and the quadric relation on random isotropic spaces") {
  const QuadraticSpace7 q = standard_split_form7();
  SmallRng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Subspace v3 = random_isotropic_3space(q, rng.next_u64());
    CHECK(v3.dim() == 3);
    CHECK(is_isotropic(q, v3));
    const SpinorVector s = pure_spinor(q, v3);  // throws unless the kernel is a line
    CHECK(spinor_pairing(s, s) == 0);
  }
}

TEST_CASE("random isometries preserve the form") {
  const QuadraticSpace7 q = standard_split_form7();
  SmallRng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const RationalMatrix g = random_isometry(q, rng);
    CHECK(g.transpose() * q.form() * g == q.form());
  }
}

TEST_CASE("spinor pairing is symmetric and nondegenerate") {
  SmallRng rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    SpinorVector s, t;
    for (auto& c : s) c = Rational(static_cast<long>(rng.next_int(-3, 3)));
    for (auto& c : t) c = Rational(static_cast<long>(rng.next_int(-3, 3)));
    CHECK(spinor_pairing(s, t) == spinor_pairing(t, s));
  }
  // pairing matrix is a signed permutation, hence nondegenerate
  for (unsigned i = 0; i < 8; ++i) {
    bool hits = false;
    for (unsigned j = 0; j < 8; ++j) {
      if (spinor_pairing(basis_spinor(i), basis_spinor(j)) != 0) hits = true;
    }
    CHECK(hits);
  }
}

TEST_CASE("spinor span dimension") {
  CHECK(spinor_span_dim({basis_spinor(0)}) == 0);
  CHECK(spinor_span_dim({basis_spinor(0), basis_spinor(1)}) == 1);
  CHECK(spinor_span_dim({basis_spinor(0), basis_spinor(0)}) == 0);
  CHECK_THROWS_AS(spinor_span_dim({}), std::invalid_argument);
  SpinorVector zero;
  zero.fill(Rational(0));
  CHECK_THROWS_AS(spinor_span_dim({zero}), std::invalid_argument);
}

TEST_CASE("isotropic extension") {
  const QuadraticSpace7 q = standard_split_form7();
  SmallRng rng(31);
  const Subspace v2 = standard_v2();
  for (int trial = 0; trial < 10; ++trial) {
    const Subspace v3 = extend_isotropic(q, v2, rng);
    CHECK(v3.dim() == 3);
    CHECK(is_isotropic(q, v3));
    CHECK(v3.contains(v2));
  }
}

TEST_CASE("pencil and family incidence for the standard plane") {
  const QuadraticSpace7 q = standard_split_form7();
  const Lemma45Report report = lemma45_check(q, standard_v2(), 5, 17);

  CHECK(report.pencil_span_dim == 1);
  REQUIRE(report.lines.size() == 5);
  for (const Lemma45Line& line : report.lines) {
    CAPTURE(line.line_coeffs[0]);
    CAPTURE(line.line_coeffs[1]);
    CHECK(line.family_span_dim == 3);
    CHECK(line.contains_pencil);
  }
  CHECK(report.clifford_samples == 100);
  CHECK(report.kernel_samples == 100);
  CHECK(report.all_pass);
}

TEST_CASE("lemma check is deterministic under a fixed seed") {
  const QuadraticSpace7 q = standard_split_form7();
  const Lemma45Report a = lemma45_check(q, standard_v2(), 5, 2);
  const Lemma45Report b = lemma45_check(q, standard_v2(), 5, 2);
  REQUIRE(a.lines.size() == b.lines.size());
  for (std::size_t i = 0; i < a.lines.size(); ++i) {
    CHECK(a.lines[i].line_coeffs == b.lines[i].line_coeffs);
    CHECK(a.lines[i].family_span_dim == b.lines[i].family_span_dim);
  }
}

TEST_CASE("incidence certificate on transformed planes") {
  const QuadraticSpace7 q = standard_split_form7();
  SmallRng rng(555);
  for (int trial = 0; trial < 3; ++trial) {
    const RationalMatrix g = random_isometry(q, rng);
    RationalMatrix basis(QuadraticSpace7::kDim, 2);
    for (std::size_t i = 0; i < QuadraticSpace7::kDim; ++i) {
      basis.at(i, 0) = g.at(i, 0);  // g(u_1)
      basis.at(i, 1) = g.at(i, 1);  // g(u_2)
    }
    const Lemma45Report report = lemma45_check(q, Subspace(std::move(basis)), 5, 99);
    CHECK(report.pencil_span_dim == 1);
    CHECK(report.all_pass);
  }
}

TEST_CASE("lemma check rejects bad planes") {
  const QuadraticSpace7 q = standard_split_form7();
  RationalMatrix non_isotropic(QuadraticSpace7::kDim, 2);
  non_isotropic.at(0, 0) = 1;  // u_1
  non_isotropic.at(3, 1) = 1;  // u'_1
  CHECK_THROWS_AS(lemma45_check(q, Subspace(std::move(non_isotropic)), 5, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(lemma45_check(q, q.u_space(), 5, 1), std::invalid_argument);  // wrong dim
}

TEST_CASE("incidence monotonicity: a chain's top spinor lies in both spans") {
  const QuadraticSpace7 q = standard_split_form7();
  SmallRng rng(41);
  const Subspace v2 = standard_v2();
  // V_1 = <u_1> inside V_2; V_3 in the pencil through V_2 contains both.
  RationalMatrix v1_basis(QuadraticSpace7::kDim, 1);
  v1_basis.at(0, 0) = 1;
  const Subspace v1(std::move(v1_basis));

  std::vector<SpinorVector> pencil, family;
  for (int trial = 0; trial < 8; ++trial) {
    const Subspace v3 = extend_isotropic(q, v2, rng);
    pencil.push_back(pure_spinor(q, v3));
    family.push_back(pure_spinor(q, v3));
  }
  for (int trial = 0; trial < 8; ++trial) {
    const Subspace w2 = extend_isotropic(q, v1, rng);
    family.push_back(pure_spinor(q, extend_isotropic(q, w2, rng)));
  }
  CHECK(spinor_span_dim(pencil) == 1);
  CHECK(spinor_span_dim(family) == 3);
}
