#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "horocalc/pasquier.hpp"
#include "horocalc/vmrt.hpp"

using namespace horocalc;

namespace {

using Pair = std::multiset<long long>;

// Closed forms of the classification table, used as oracles against the
// values recomputed from root systems.  The d and r columns are compared as
// multisets: the table's row (iii) lists them in the order opposite to the
// triple order.
struct ClosedForms {
  Pair d;
  Pair r;
  bool verdict;
};

ClosedForms closed_forms(const HorosphericalTriple& t) {
  const long long m = t.m, k = t.k;
  switch (t.tag) {
    case CaseTag::i: return {{1, m - 1}, {m + 1, 2 * m}, false};
    case CaseTag::ii: return {{3, 2}, {5, 6}, true};
    case CaseTag::iii: return {{2 * m - 2 * k - 1, k}, {2 * m - k + 1, 2 * m - k}, true};
    case CaseTag::iv: return {{2, 2}, {5, 7}, false};
    case CaseTag::v: return {{1, 1}, {3, 5}, false};
  }
  throw std::logic_error("bad tag");
}

}  // namespace

TEST_CASE("triple validation") {
  CHECK_THROWS_AS(validate_triple({CaseTag::i, 2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(validate_triple({CaseTag::iii, 1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(validate_triple({CaseTag::iii, 3, 3}), std::invalid_argument);
  CHECK_NOTHROW(validate_triple({CaseTag::iii, 3, 2}));
  CHECK_NOTHROW(validate_triple({CaseTag::ii, 0, 0}));
}

TEST_CASE("enumeration by rank") {
  SUBCASE("rank 2") {
    const auto triples = enumerate_triples(2);
    REQUIRE(triples.size() == 2);
    CHECK(triples[0] == HorosphericalTriple{CaseTag::iii, 2, 1});
    CHECK(triples[1] == HorosphericalTriple{CaseTag::v, 0, 0});
  }
  SUBCASE("rank 3 adds (i) m=3, (ii) and (iii) m=3") {
    const auto triples = enumerate_triples(3);
    std::multiset<std::string> labels;
    for (const auto& t : triples) labels.insert(t.label());
    CHECK(labels == std::multiset<std::string>{"(i) m=3", "(ii)", "(iii) m=2 k=1",
                                               "(iii) m=3 k=1", "(iii) m=3 k=2", "(v)"});
  }
  SUBCASE("rank 4 includes the F_4 case") {
    const auto triples = enumerate_triples(4);
    CHECK(std::count_if(triples.begin(), triples.end(),
                        [](const auto& t) { return t.tag == CaseTag::iv; }) == 1);
  }
  SUBCASE("no duplicates up to rank 8") {
    const auto triples = enumerate_triples(8);
    CHECK(triples.size() == 37);  // 6 + 1 + 28 + 1 + 1
    std::set<std::string> labels;
    for (const auto& t : triples) labels.insert(t.label());
    CHECK(labels.size() == triples.size());
  }
  CHECK_THROWS_AS(enumerate_triples(1), std::invalid_argument);
}

TEST_CASE("case (ii) geometry") {
  const HorosphericalTriple t{CaseTag::ii, 0, 0};
  const TripleGeometry g = triple_geometry(t);
  CHECK(g.d1 == 3);
  CHECK(g.d2 == 2);
  CHECK(g.dim_x == 9);
  CHECK(g.r_x == 7);
  const ClosedOrbitData d = closed_orbit_data(t);
  CHECK(d.r1 == 5);
  CHECK(d.r2 == 6);
  CHECK(d.c1 == 4);
  CHECK(d.c2 == 3);
  CHECK(nef_obstruction_holds(t));
}

TEST_CASE("case (iv) and (v) data") {
  const ClosedOrbitData iv = closed_orbit_data({CaseTag::iv, 0, 0});
  CHECK(iv.r1 == 5);
  CHECK(iv.r2 == 7);
  CHECK_FALSE(nef_obstruction_holds({CaseTag::iv, 0, 0}));

  const TripleGeometry v = triple_geometry({CaseTag::v, 0, 0});
  CHECK(v.d1 == 1);
  CHECK(v.d2 == 1);
  CHECK(v.r_x == 4);
  const ClosedOrbitData vd = closed_orbit_data({CaseTag::v, 0, 0});
  CHECK(vd.r1 == 3);
  CHECK(vd.r2 == 5);
  CHECK_FALSE(nef_obstruction_holds({CaseTag::v, 0, 0}));
}

TEST_CASE("case (i) m=3 index multiset") {
  const ClosedOrbitData d = closed_orbit_data({CaseTag::i, 3, 0});
  CHECK(Pair{d.r1, d.r2} == Pair{4, 6});
  const TripleGeometry g = triple_geometry({CaseTag::i, 3, 0});
  CHECK(Pair{g.d1, g.d2} == Pair{1, 2});
}

TEST_CASE("case (iii) small instances") {
  const TripleGeometry g21 = triple_geometry({CaseTag::iii, 2, 1});
  CHECK(Pair{g21.d1, g21.d2} == Pair{1, 1});
  CHECK(g21.r_x == 4);

  // r_X = max(r_1, r_2) exactly on this family
  for (int m = 2; m <= 6; ++m) {
    for (int k = 1; k <= m - 1; ++k) {
      const HorosphericalTriple t{CaseTag::iii, m, k};
      const TripleGeometry g = triple_geometry(t);
      const ClosedOrbitData d = closed_orbit_data(t);
      CHECK(g.r_x == std::max(d.r1, d.r2));
      CHECK(nef_obstruction_holds(t));
    }
  }
}

TEST_CASE("computed table matches the closed forms up to rank 6") {
  for (const TripleRecord& r : emit_table(6)) {
    CAPTURE(r.triple.label());
    const ClosedForms expect = closed_forms(r.triple);
    CHECK(Pair{r.d1, r.d2} == expect.d);
    CHECK(Pair{r.r1, r.r2} == expect.r);
    CHECK(r.obstruction_holds == expect.verdict);
    CHECK(r.r_x == r.d1 + r.d2 + 2);
    CHECK(r.c1 == r.d1 + 1);
    CHECK(r.c2 == r.d2 + 1);
  }
}

TEST_CASE("obstruction holds exactly on cases (ii) and (iii) up to rank 8") {
  for (const TripleRecord& r : emit_table(8)) {
    const bool expected = r.triple.tag == CaseTag::ii || r.triple.tag == CaseTag::iii;
    CHECK(r.obstruction_holds == expected);
  }
}

TEST_CASE("case (iii) dimension agrees with the odd Grassmannian count") {
  for (int m = 2; m <= 6; ++m) {
    for (int k = 1; k <= m - 1; ++k) {
      const HorosphericalTriple t{CaseTag::iii, m, k};
      const auto [gm, gi] = case_iii_grassmannian_parameters(t);
      CHECK(gm == m);
      CHECK(gi == k + 1);
      CHECK(triple_geometry(t).dim_x == odd_grassmannian_dim(gi, gm));
    }
  }
  CHECK_THROWS_AS(case_iii_grassmannian_parameters({CaseTag::ii, 0, 0}), std::invalid_argument);
}

TEST_CASE("record order follows the enumeration") {
  const auto records = emit_table(5);
  const auto triples = enumerate_triples(5);
  REQUIRE(records.size() == triples.size());
  for (std::size_t i = 0; i < records.size(); ++i) CHECK(records[i].triple == triples[i]);
  CHECK(records.front().triple.label() == "(i) m=3");
  CHECK(records.back().triple.label() == "(v)");
}
