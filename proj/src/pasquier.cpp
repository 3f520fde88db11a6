#include "horocalc/pasquier.hpp"

#include <stdexcept>

#include "horocalc/parabolic.hpp"

namespace horocalc {

std::string to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::i: return "i";
    case CaseTag::ii: return "ii";
    case CaseTag::iii: return "iii";
    case CaseTag::iv: return "iv";
    case CaseTag::v: return "v";
  }
  return "?";
}

DynkinType HorosphericalTriple::group() const {
  switch (tag) {
    case CaseTag::i: return {Family::B, m};
    case CaseTag::ii: return {Family::B, 3};
    case CaseTag::iii: return {Family::C, m};
    case CaseTag::iv: return {Family::F, 4};
    case CaseTag::v: return {Family::G, 2};
  }
  throw std::logic_error("bad case tag");
}

int HorosphericalTriple::mark1() const {
  switch (tag) {
    case CaseTag::i: return m - 1;
    case CaseTag::ii: return 1;
    case CaseTag::iii: return k + 1;
    case CaseTag::iv: return 2;
    case CaseTag::v: return 2;
  }
  throw std::logic_error("bad case tag");
}

int HorosphericalTriple::mark2() const {
  switch (tag) {
    case CaseTag::i: return m;
    case CaseTag::ii: return 3;
    case CaseTag::iii: return k;
    case CaseTag::iv: return 3;
    case CaseTag::v: return 1;
  }
  throw std::logic_error("bad case tag");
}

std::string HorosphericalTriple::label() const {
  std::string out = "(" + to_string(tag) + ")";
  if (tag == CaseTag::i) out += " m=" + std::to_string(m);
  if (tag == CaseTag::iii) out += " m=" + std::to_string(m) + " k=" + std::to_string(k);
  return out;
}

void validate_triple(const HorosphericalTriple& t) {
  switch (t.tag) {
    case CaseTag::i:
      if (t.m < 3) throw std::invalid_argument("case (i) requires m >= 3");
      return;
    case CaseTag::iii:
      if (t.m < 2) throw std::invalid_argument("case (iii) requires m >= 2");
      if (t.k < 1 || t.k > t.m - 1) {
        throw std::invalid_argument("case (iii) requires 1 <= k <= m-1");
      }
      return;
    case CaseTag::ii:
    case CaseTag::iv:
    case CaseTag::v:
      return;
  }
  throw std::invalid_argument("unknown case tag");
}

std::vector<HorosphericalTriple> enumerate_triples(int max_rank) {
  if (max_rank < 2) throw std::invalid_argument("enumerate_triples requires max_rank >= 2");
  std::vector<HorosphericalTriple> out;
  for (int m = 3; m <= max_rank; ++m) out.push_back({CaseTag::i, m, 0});
  if (max_rank >= 3) out.push_back({CaseTag::ii, 0, 0});
  for (int m = 2; m <= max_rank; ++m)
    for (int k = 1; k <= m - 1; ++k) out.push_back({CaseTag::iii, m, k});
  if (max_rank >= 4) out.push_back({CaseTag::iv, 0, 0});
  out.push_back({CaseTag::v, 0, 0});
  return out;
}

TripleGeometry triple_geometry(const HorosphericalTriple& t) {
  validate_triple(t);
  const RootSystem rs = build_root_system(t.group());
  const IndexSet full = IndexSet::full(rs.rank());
  const IndexSet levi_p = full.minus(IndexSet{t.mark1(), t.mark2()});
  const IndexSet levi_p1 = full.minus(IndexSet{t.mark1()});
  const IndexSet levi_p2 = full.minus(IndexSet{t.mark2()});

  TripleGeometry g;
  g.d1 = parabolic_quotient_dim(rs, levi_p1, levi_p);
  g.d2 = parabolic_quotient_dim(rs, levi_p2, levi_p);
  g.dim_x = flag_dim(rs, levi_p) + 1;
  g.r_x = g.d1 + g.d2 + 2;
  return g;
}

ClosedOrbitData closed_orbit_data(const HorosphericalTriple& t) {
  validate_triple(t);
  const RootSystem rs = build_root_system(t.group());
  const TripleGeometry g = triple_geometry(t);

  ClosedOrbitData d;
  d.r1 = fano_index(rs, t.mark1());
  d.r2 = fano_index(rs, t.mark2());
  d.c1 = g.d1 + 1;
  d.c2 = g.d2 + 1;
  return d;
}

bool nef_obstruction_holds(const HorosphericalTriple& t) {
  const TripleGeometry g = triple_geometry(t);
  const ClosedOrbitData d = closed_orbit_data(t);
  return g.r_x >= std::max(d.r1, d.r2);
}

std::vector<TripleRecord> emit_table(int max_rank) {
  std::vector<TripleRecord> out;
  for (const HorosphericalTriple& t : enumerate_triples(max_rank)) {
    const TripleGeometry g = triple_geometry(t);
    const ClosedOrbitData d = closed_orbit_data(t);
    TripleRecord r;
    r.triple = t;
    r.d1 = g.d1;
    r.d2 = g.d2;
    r.c1 = d.c1;
    r.c2 = d.c2;
    r.r1 = d.r1;
    r.r2 = d.r2;
    r.r_x = g.r_x;
    r.dim_x = g.dim_x;
    r.obstruction_holds = r.r_x >= std::max(r.r1, r.r2);
    out.push_back(r);
  }
  return out;
}

std::pair<int, int> case_iii_grassmannian_parameters(const HorosphericalTriple& t) {
  validate_triple(t);
  if (t.tag != CaseTag::iii) {
    throw std::invalid_argument("grassmannian parameters are defined for case (iii) only");
  }
  return {t.m, t.k + 1};
}

}  // namespace horocalc
