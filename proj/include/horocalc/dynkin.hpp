#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "horocalc/index_set.hpp"

namespace horocalc {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct DynkinType {
  Family family;
  int rank;

  friend bool operator==(const DynkinType&, const DynkinType&) = default;
};

// "B3" -> {B, 3}; throws std::invalid_argument on unknown family or a rank
// outside the bounds A>=1, B>=2, C>=2, D>=3, E in {6,7,8}, F=4, G=2.
DynkinType parse_dynkin_type(std::string_view text);
std::string to_string(const DynkinType& t);

// Validates the family/rank bounds above; throws naming the violated bound.
void validate_type(const DynkinType& t);

// A simple root system in Bourbaki numbering.  Positive roots are integer
// coefficient vectors over the simple roots, generated by saturation from
// the simple roots and sorted by height, then lexicographically.
//
// Cartan convention: cartan(i, j) = 2(a_i, a_j)/(a_j, a_j), so column j is
// the pairing against the j-th coroot.
class RootSystem {
 public:
  const DynkinType& type() const { return type_; }
  int rank() const { return type_.rank; }

  // 1-based node indices.
  int cartan(int i, int j) const;
  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }

  const std::vector<std::vector<int>>& positive_roots() const { return positive_; }

  // <beta, a_j^vee> for a vector beta in simple-root coordinates; j 1-based.
  long long coroot_pairing(const std::vector<int>& beta, int j) const;

  // True iff {i : beta_i != 0} is contained in the given node set.
  static bool supported_on(const std::vector<int>& beta, const IndexSet& nodes);

  // Nodes i, j (i != j) joined by an edge of the diagram.
  bool adjacent(int i, int j) const;

  void require_valid_index(int i) const;  // throws std::invalid_argument

  friend RootSystem build_root_system(const DynkinType& t);

 private:
  DynkinType type_{Family::A, 1};
  std::vector<std::vector<int>> cartan_;    // rank x rank
  std::vector<std::vector<int>> positive_;  // coefficient vectors
};

RootSystem build_root_system(const DynkinType& t);

// Connected components of the full subdiagram on `nodes`; each block sorted,
// blocks ordered by smallest element.  Out-of-range indices are rejected.
std::vector<IndexSet> subdiagram_components(const RootSystem& rs, const IndexSet& nodes);

// True iff no connected component of the subdiagram on A u B meets both A
// and B.  Requires A and B disjoint.
bool components_disjoint(const RootSystem& rs, const IndexSet& a, const IndexSet& b);

}  // namespace horocalc
