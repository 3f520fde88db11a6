#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace horocalc {

// Sorted set of 1-based node indices of a Dynkin diagram.  Used for Levi
// subsets, color sets and diagram subsets alike.
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(std::initializer_list<int> ids);
  explicit IndexSet(std::vector<int> ids);

  // {1, ..., rank}
  static IndexSet full(int rank);

  bool contains(int i) const;
  bool empty() const { return ids_.empty(); }
  std::size_t size() const { return ids_.size(); }

  bool subset_of(const IndexSet& other) const;
  bool disjoint_with(const IndexSet& other) const;

  IndexSet unite(const IndexSet& other) const;
  IndexSet minus(const IndexSet& other) const;
  IndexSet intersect(const IndexSet& other) const;

  const std::vector<int>& ids() const { return ids_; }

  // "{1,3}" (for diagnostics)
  std::string to_string() const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;
  friend auto operator<=>(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<int> ids_;  // sorted, unique
};

}  // namespace horocalc
