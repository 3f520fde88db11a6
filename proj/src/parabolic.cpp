#include "horocalc/parabolic.hpp"

#include <stdexcept>

namespace horocalc {

namespace {

void require_nodes(const RootSystem& rs, const IndexSet& levi) {
  for (int i : levi.ids()) rs.require_valid_index(i);
}

}  // namespace

long long flag_dim(const RootSystem& rs, const IndexSet& levi) {
  require_nodes(rs, levi);
  long long dim = 0;
  for (const auto& beta : rs.positive_roots()) {
    if (!RootSystem::supported_on(beta, levi)) ++dim;
  }
  return dim;
}

long long parabolic_quotient_dim(const RootSystem& rs, const IndexSet& levi_big,
                                 const IndexSet& levi_small) {
  require_nodes(rs, levi_big);
  require_nodes(rs, levi_small);
  if (!levi_small.subset_of(levi_big)) {
    throw std::invalid_argument("parabolic_quotient_dim: " + levi_small.to_string() +
                                " is not contained in " + levi_big.to_string());
  }
  return flag_dim(rs, levi_small) - flag_dim(rs, levi_big);
}

std::vector<long long> nilradical_weight_sum(const RootSystem& rs, const IndexSet& levi) {
  require_nodes(rs, levi);
  std::vector<long long> kappa(static_cast<std::size_t>(rs.rank()), 0);
  for (const auto& beta : rs.positive_roots()) {
    if (RootSystem::supported_on(beta, levi)) continue;
    for (std::size_t a = 0; a < kappa.size(); ++a) kappa[a] += beta[a];
  }
  return kappa;
}

std::map<int, long long> fano_index_vector(const RootSystem& rs, const IndexSet& levi) {
  require_nodes(rs, levi);
  if (levi == IndexSet::full(rs.rank())) {
    throw std::invalid_argument("fano_index_vector: Levi subset is all of S, G/G is a point");
  }
  const std::vector<long long> kappa = nilradical_weight_sum(rs, levi);

  std::map<int, long long> coeffs;
  for (int j = 1; j <= rs.rank(); ++j) {
    long long c = 0;
    for (std::size_t a = 0; a < kappa.size(); ++a) {
      c += kappa[a] * rs.cartan(static_cast<int>(a) + 1, j);
    }
    if (levi.contains(j)) {
      if (c != 0) {
        throw std::logic_error("anticanonical weight pairs nontrivially with Levi node " +
                               std::to_string(j));
      }
      continue;
    }
    if (c <= 0) {
      throw std::logic_error("nonpositive index coefficient at node " + std::to_string(j));
    }
    coeffs[j] = c;
  }
  return coeffs;
}

long long fano_index(const RootSystem& rs, const IndexSet& levi, int marked) {
  rs.require_valid_index(marked);
  if (levi != IndexSet::full(rs.rank()).minus(IndexSet{marked})) {
    throw std::invalid_argument("fano_index: Levi subset " + levi.to_string() +
                                " is not maximal at node " + std::to_string(marked));
  }
  return fano_index_vector(rs, levi).at(marked);
}

long long fano_index(const RootSystem& rs, int marked) {
  rs.require_valid_index(marked);
  return fano_index(rs, IndexSet::full(rs.rank()).minus(IndexSet{marked}), marked);
}

}  // namespace horocalc
