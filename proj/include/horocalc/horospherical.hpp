#pragma once

#include <vector>

#include "horocalc/dynkin.hpp"
#include "horocalc/index_set.hpp"

namespace horocalc {

// A horospherical embedding is abstracted to (root system, Levi subset,
// lattice rank, colored fan); the group H itself is never represented.

struct LatticeData {
  int rank_m = 0;  // rank of the character lattice M of the open orbit
};

struct ColoredFanEntry {
  std::vector<std::vector<long long>> cone_generators;  // vectors in N, length rank_m
  IndexSet colors;                                      // subset of S \ Levi
};

// Throws unless the generators are nonzero vectors of length rank_m spanning
// a strictly convex cone and the colors avoid the Levi subset.
void validate_fan_entry(const RootSystem& rs, const IndexSet& levi, const LatticeData& lat,
                        const ColoredFanEntry& entry);

// Dimension of the orbit attached to a colored-fan entry: the rank of the
// sublattice of M orthogonal to the cone, plus dim G/P over Levi u colors.
long long orbit_dimension(const RootSystem& rs, const IndexSet& levi, const LatticeData& lat,
                          const ColoredFanEntry& entry);

// True iff I, J, D partition the full node set.
bool color_partition_check(const RootSystem& rs, const IndexSet& levi, const IndexSet& j_set,
                           const IndexSet& d_set);

// Evaluates dim G/P_I = dim G/P_{S\J} + dim G/P_{I u J} exactly; requires I
// and J disjoint.  The identity holds precisely when no positive root's
// support meets both J and S \ (I u J) -- equivalently, when every diagram
// component touching J lies inside I u J.
bool fibration_dim_identity(const RootSystem& rs, const IndexSet& levi, const IndexSet& j_set);

}  // namespace horocalc
