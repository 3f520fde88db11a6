#include "horocalc/index_set.hpp"

#include <algorithm>
#include <numeric>

namespace horocalc {

namespace {

std::vector<int> normalized(std::vector<int> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

}  // namespace

IndexSet::IndexSet(std::initializer_list<int> ids) : ids_(normalized(std::vector<int>(ids))) {}

IndexSet::IndexSet(std::vector<int> ids) : ids_(normalized(std::move(ids))) {}

IndexSet IndexSet::full(int rank) {
  std::vector<int> ids(static_cast<std::size_t>(rank > 0 ? rank : 0));
  std::iota(ids.begin(), ids.end(), 1);
  IndexSet s;
  s.ids_ = std::move(ids);
  return s;
}

bool IndexSet::contains(int i) const {
  return std::binary_search(ids_.begin(), ids_.end(), i);
}

bool IndexSet::subset_of(const IndexSet& other) const {
  return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(), ids_.end());
}

bool IndexSet::disjoint_with(const IndexSet& other) const {
  return intersect(other).empty();
}

IndexSet IndexSet::unite(const IndexSet& other) const {
  std::vector<int> out;
  std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                 std::back_inserter(out));
  IndexSet s;
  s.ids_ = std::move(out);
  return s;
}

IndexSet IndexSet::minus(const IndexSet& other) const {
  std::vector<int> out;
  std::set_difference(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                      std::back_inserter(out));
  IndexSet s;
  s.ids_ = std::move(out);
  return s;
}

IndexSet IndexSet::intersect(const IndexSet& other) const {
  std::vector<int> out;
  std::set_intersection(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                        std::back_inserter(out));
  IndexSet s;
  s.ids_ = std::move(out);
  return s;
}

std::string IndexSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(ids_[i]);
  }
  out += '}';
  return out;
}

}  // namespace horocalc
