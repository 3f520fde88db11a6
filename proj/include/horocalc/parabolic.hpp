#pragma once

#include <map>
#include <vector>

#include "horocalc/dynkin.hpp"
#include "horocalc/index_set.hpp"

namespace horocalc {

// A parabolic subgroup is named by its Levi subset: the diagram nodes whose
// root subgroups it contains.  The empty set is the Borel, the full set is G.
// The maximal parabolic P(w_i) has Levi subset S \ {i}.

// dim G/P = number of positive roots not supported on the Levi subset.
long long flag_dim(const RootSystem& rs, const IndexSet& levi);

// Fiber dimension of G/P_small -> G/P_big; requires levi_small within levi_big.
long long parabolic_quotient_dim(const RootSystem& rs, const IndexSet& levi_big,
                                 const IndexSet& levi_small);

// Sum of the positive roots not supported on the Levi subset (the nilradical
// roots), in simple-root coordinates.  This is the anticanonical weight of
// G/P.
std::vector<long long> nilradical_weight_sum(const RootSystem& rs, const IndexSet& levi);

// Coefficients c_j = <kappa, a_j^vee> of the anticanonical weight in the
// fundamental-weight basis, for each node j outside the Levi subset.  Every
// c_j is positive, and the pairing vanishes on Levi nodes.  Rejects levi = S.
std::map<int, long long> fano_index_vector(const RootSystem& rs, const IndexSet& levi);

// The single coefficient for a maximal parabolic; requires levi = S \ {marked}.
long long fano_index(const RootSystem& rs, const IndexSet& levi, int marked);
long long fano_index(const RootSystem& rs, int marked);  // levi implied

}  // namespace horocalc
