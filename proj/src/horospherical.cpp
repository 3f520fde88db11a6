#include "horocalc/horospherical.hpp"

#include <algorithm>
#include <stdexcept>

#include "horocalc/parabolic.hpp"
#include "horocalc/rational.hpp"

namespace horocalc {

void validate_fan_entry(const RootSystem& rs, const IndexSet& levi, const LatticeData& lat,
                        const ColoredFanEntry& entry) {
  if (lat.rank_m < 0) throw std::invalid_argument("lattice rank must be nonnegative");
  for (int i : entry.colors.ids()) rs.require_valid_index(i);
  if (!entry.colors.disjoint_with(levi)) {
    throw std::invalid_argument("colors " + entry.colors.to_string() +
                                " meet the Levi subset " + levi.to_string());
  }
  for (const auto& v : entry.cone_generators) {
    if (v.size() != static_cast<std::size_t>(lat.rank_m)) {
      throw std::invalid_argument("cone generator length " + std::to_string(v.size()) +
                                  " does not match lattice rank " + std::to_string(lat.rank_m));
    }
    if (std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; })) {
      throw std::invalid_argument("zero vector supplied as cone generator");
    }
  }
  if (exists_nontrivial_nonneg_zero_combination(entry.cone_generators)) {
    throw std::invalid_argument("cone generators do not span a strictly convex cone");
  }
}

long long orbit_dimension(const RootSystem& rs, const IndexSet& levi, const LatticeData& lat,
                          const ColoredFanEntry& entry) {
  validate_fan_entry(rs, levi, lat, entry);

  // Characters orthogonal to the cone: kernel rank of the generator matrix.
  const RationalMatrix gens = RationalMatrix::from_rows(entry.cone_generators);
  const long long orthogonal_rank =
      entry.cone_generators.empty() ? lat.rank_m
                                    : lat.rank_m - static_cast<long long>(gens.rank());

  return orthogonal_rank + flag_dim(rs, levi.unite(entry.colors));
}

bool color_partition_check(const RootSystem& rs, const IndexSet& levi, const IndexSet& j_set,
                           const IndexSet& d_set) {
  for (int i : levi.ids()) rs.require_valid_index(i);
  for (int i : j_set.ids()) rs.require_valid_index(i);
  for (int i : d_set.ids()) rs.require_valid_index(i);
  if (!levi.disjoint_with(j_set) || !levi.disjoint_with(d_set) || !j_set.disjoint_with(d_set)) {
    return false;
  }
  return levi.unite(j_set).unite(d_set) == IndexSet::full(rs.rank());
}

bool fibration_dim_identity(const RootSystem& rs, const IndexSet& levi, const IndexSet& j_set) {
  for (int i : levi.ids()) rs.require_valid_index(i);
  for (int i : j_set.ids()) rs.require_valid_index(i);
  if (!levi.disjoint_with(j_set)) {
    throw std::invalid_argument("fibration_dim_identity: I and J overlap on " +
                                levi.intersect(j_set).to_string());
  }
  const IndexSet full = IndexSet::full(rs.rank());
  const long long lhs = flag_dim(rs, levi);
  const long long rhs = flag_dim(rs, full.minus(j_set)) + flag_dim(rs, levi.unite(j_set));
  return lhs == rhs;
}

}  // namespace horocalc
