#pragma once

#include <string>
#include <vector>

#include "horocalc/dynkin.hpp"

namespace horocalc {

// Pasquier's classification of the smooth projective non-homogeneous
// horospherical varieties of Picard rank one.  Each variety is determined by
// a triple (G, P(w_a), P(w_b)); the five families are:
//
//   (i)   (B_m, P(w_{m-1}), P(w_m)),   m >= 3
//   (ii)  (B_3, P(w_1),     P(w_3))
//   (iii) (C_m, P(w_{k+1}), P(w_k)),   m >= 2, 1 <= k <= m-1
//   (iv)  (F_4, P(w_2),     P(w_3))
//   (v)   (G_2, P(w_2),     P(w_1))
enum class CaseTag { i, ii, iii, iv, v };

std::string to_string(CaseTag tag);  // "i" .. "v"

struct HorosphericalTriple {
  CaseTag tag;
  int m = 0;  // rank parameter for cases (i) and (iii); fixed otherwise
  int k = 0;  // secondary parameter, case (iii) only

  DynkinType group() const;
  int mark1() const;  // a, with P_1 = P(w_a)
  int mark2() const;  // b, with P_2 = P(w_b)

  // "(iii) m=4 k=2"; fixed-rank cases carry no parameters.
  std::string label() const;

  friend bool operator==(const HorosphericalTriple&, const HorosphericalTriple&) = default;
};

// Throws std::invalid_argument if the parameters violate the family
// constraints above.
void validate_triple(const HorosphericalTriple& t);

// All triples whose group has rank <= max_rank, each exactly once, ordered by
// (case, m, k).  Requires max_rank >= 2.
std::vector<HorosphericalTriple> enumerate_triples(int max_rank);

struct TripleGeometry {
  long long d1 = 0;     // dim P_1/P, with P = P_1 n P_2
  long long d2 = 0;     // dim P_2/P
  long long dim_x = 0;  // dim G/P + 1
  long long r_x = 0;    // d1 + d2 + 2
};

TripleGeometry triple_geometry(const HorosphericalTriple& t);

struct ClosedOrbitData {
  long long r1 = 0;  // Fano index of G/P_1
  long long r2 = 0;  // Fano index of G/P_2
  long long c1 = 0;  // codimension of the closed orbit G/P_1, = d1 + 1
  long long c2 = 0;
};

ClosedOrbitData closed_orbit_data(const HorosphericalTriple& t);

// r_X >= max(r_1, r_2): the necessary condition for the tangent bundle of the
// horospherical variety to be nef.
bool nef_obstruction_holds(const HorosphericalTriple& t);

struct TripleRecord {
  HorosphericalTriple triple;
  long long d1 = 0, d2 = 0;
  long long c1 = 0, c2 = 0;
  long long r1 = 0, r2 = 0;
  long long r_x = 0;
  long long dim_x = 0;
  bool obstruction_holds = false;
};

// One record per enumerated triple, all fields computed from root-system
// primitives.  Ordering matches enumerate_triples.
std::vector<TripleRecord> emit_table(int max_rank);

// Case (iii) parameters (m, k) name the odd symplectic Grassmannian of
// (k+1)-dimensional isotropic subspaces of a (2m+1)-dimensional space; the
// fiber-stratification code parameterizes the same variety by the subspace
// dimension directly.  Returns that (m, subspace_dim) pair.
std::pair<int, int> case_iii_grassmannian_parameters(const HorosphericalTriple& t);

}  // namespace horocalc
