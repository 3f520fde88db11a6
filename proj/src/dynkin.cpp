#include "horocalc/dynkin.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace horocalc {

namespace {

std::string bound_description(Family f) {
  switch (f) {
    case Family::A: return "A requires rank >= 1";
    case Family::B: return "B requires rank >= 2";
    case Family::C: return "C requires rank >= 2";
    case Family::D: return "D requires rank >= 3";
    case Family::E: return "E requires rank in {6,7,8}";
    case Family::F: return "F requires rank = 4";
    case Family::G: return "G requires rank = 2";
  }
  return "unknown family";
}

bool rank_ok(Family f, int rank) {
  switch (f) {
    case Family::A: return rank >= 1;
    case Family::B: return rank >= 2;
    case Family::C: return rank >= 2;
    case Family::D: return rank >= 3;
    case Family::E: return rank == 6 || rank == 7 || rank == 8;
    case Family::F: return rank == 4;
    case Family::G: return rank == 2;
  }
  return false;
}

long long height(const std::vector<int>& beta) {
  long long h = 0;
  for (int c : beta) h += c;
  return h;
}

// Bourbaki numbering.  Returns the rank x rank Cartan matrix with
// entry [i][j] = 2(a_i, a_j)/(a_j, a_j), 0-based storage.
std::vector<std::vector<int>> cartan_matrix_for(const DynkinType& t) {
  const int n = t.rank;
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;

  auto single_edge = [&](int i, int j) {  // 1-based
    c[i - 1][j - 1] = -1;
    c[j - 1][i - 1] = -1;
  };
  // Double/triple bond: the pairing of the long root against the short
  // coroot is -mult, the reverse is -1.
  auto long_short_edge = [&](int long_node, int short_node, int mult) {
    c[long_node - 1][short_node - 1] = -mult;
    c[short_node - 1][long_node - 1] = -1;
  };

  switch (t.family) {
    case Family::A:
      for (int i = 1; i < n; ++i) single_edge(i, i + 1);
      break;
    case Family::B:  // a_n short
      for (int i = 1; i + 1 < n; ++i) single_edge(i, i + 1);
      long_short_edge(n - 1, n, 2);
      break;
    case Family::C:  // a_n long
      for (int i = 1; i + 1 < n; ++i) single_edge(i, i + 1);
      long_short_edge(n, n - 1, 2);
      break;
    case Family::D:
      for (int i = 1; i + 1 < n; ++i) single_edge(i, i + 1);
      single_edge(n - 2, n);
      break;
    case Family::E:
      // chain 1-3-4-5-...-n with node 2 attached to node 4
      single_edge(1, 3);
      single_edge(3, 4);
      single_edge(2, 4);
      for (int i = 4; i < n; ++i) single_edge(i, i + 1);
      break;
    case Family::F:  // a_1, a_2 long; a_3, a_4 short
      single_edge(1, 2);
      long_short_edge(2, 3, 2);
      single_edge(3, 4);
      break;
    case Family::G:  // a_1 short, a_2 long
      long_short_edge(2, 1, 3);
      break;
  }
  return c;
}

}  // namespace

void validate_type(const DynkinType& t) {
  if (!rank_ok(t.family, t.rank)) {
    throw std::invalid_argument("invalid Dynkin type " + to_string(t) + ": " +
                                bound_description(t.family));
  }
}

DynkinType parse_dynkin_type(std::string_view text) {
  if (text.size() < 2) throw std::invalid_argument("Dynkin type must look like 'B3'");
  const char f = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  if (f < 'A' || f > 'G') {
    throw std::invalid_argument(std::string("unknown family '") + text[0] + "'");
  }
  int rank = 0;
  for (std::size_t i = 1; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw std::invalid_argument("malformed rank in Dynkin type '" + std::string(text) + "'");
    }
    rank = rank * 10 + (text[i] - '0');
    if (rank > 64) throw std::invalid_argument("rank too large in '" + std::string(text) + "'");
  }
  DynkinType t{static_cast<Family>(f), rank};
  validate_type(t);
  return t;
}

std::string to_string(const DynkinType& t) {
  return std::string(1, static_cast<char>(t.family)) + std::to_string(t.rank);
}

int RootSystem::cartan(int i, int j) const {
  require_valid_index(i);
  require_valid_index(j);
  return cartan_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
}

long long RootSystem::coroot_pairing(const std::vector<int>& beta, int j) const {
  require_valid_index(j);
  if (beta.size() != cartan_.size()) {
    throw std::invalid_argument("coefficient vector has wrong length");
  }
  long long v = 0;
  for (std::size_t a = 0; a < beta.size(); ++a) {
    v += static_cast<long long>(beta[a]) * cartan_[a][static_cast<std::size_t>(j - 1)];
  }
  return v;
}

bool RootSystem::supported_on(const std::vector<int>& beta, const IndexSet& nodes) {
  for (std::size_t a = 0; a < beta.size(); ++a) {
    if (beta[a] != 0 && !nodes.contains(static_cast<int>(a) + 1)) return false;
  }
  return true;
}

bool RootSystem::adjacent(int i, int j) const {
  require_valid_index(i);
  require_valid_index(j);
  return i != j && cartan_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] != 0;
}

void RootSystem::require_valid_index(int i) const {
  if (i < 1 || i > rank()) {
    throw std::invalid_argument("node index " + std::to_string(i) + " out of range 1.." +
                                std::to_string(rank()));
  }
}

RootSystem build_root_system(const DynkinType& t) {
  validate_type(t);
  RootSystem rs;
  rs.type_ = t;
  rs.cartan_ = cartan_matrix_for(t);

  const int n = t.rank;
  std::set<std::vector<int>> known;
  std::vector<std::vector<int>> frontier;
  for (int i = 0; i < n; ++i) {
    std::vector<int> simple(static_cast<std::size_t>(n), 0);
    simple[static_cast<std::size_t>(i)] = 1;
    known.insert(simple);
    frontier.push_back(std::move(simple));
  }

  // Saturation by root strings: beta + a_i is a root iff the string
  // a_i-string through beta has q = p - <beta, a_i^vee> >= 1, where p is the
  // number of times a_i can be subtracted while staying a root.  Processing
  // by height keeps every lower root available when p is computed.
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& beta : frontier) {
      for (int i = 1; i <= n; ++i) {
        long long p = 0;
        std::vector<int> down = beta;
        while (true) {
          down[static_cast<std::size_t>(i - 1)] -= 1;
          if (down[static_cast<std::size_t>(i - 1)] < 0 || !known.count(down)) break;
          ++p;
        }
        long long pairing = 0;
        for (std::size_t a = 0; a < beta.size(); ++a) {
          pairing += static_cast<long long>(beta[a]) * rs.cartan_[a][static_cast<std::size_t>(i - 1)];
        }
        if (p - pairing >= 1) {
          std::vector<int> up = beta;
          up[static_cast<std::size_t>(i - 1)] += 1;
          if (known.insert(up).second) next.push_back(std::move(up));
        }
      }
    }
    frontier = std::move(next);
  }

  rs.positive_.assign(known.begin(), known.end());
  std::sort(rs.positive_.begin(), rs.positive_.end(),
            [](const std::vector<int>& x, const std::vector<int>& y) {
              const long long hx = height(x), hy = height(y);
              if (hx != hy) return hx < hy;
              return x < y;
            });
  return rs;
}

std::vector<IndexSet> subdiagram_components(const RootSystem& rs, const IndexSet& nodes) {
  for (int i : nodes.ids()) rs.require_valid_index(i);

  std::map<int, int> label;  // node -> component representative
  for (int i : nodes.ids()) label[i] = i;

  // Union by repeated relabeling; node counts are tiny.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i : nodes.ids()) {
      for (int j : nodes.ids()) {
        if (i < j && rs.adjacent(i, j) && label[i] != label[j]) {
          const int lo = std::min(label[i], label[j]);
          const int hi = std::max(label[i], label[j]);
          for (auto& [node, rep] : label) {
            if (rep == hi) rep = lo;
          }
          changed = true;
        }
      }
    }
  }

  std::map<int, std::vector<int>> blocks;
  for (int i : nodes.ids()) blocks[label[i]].push_back(i);
  std::vector<IndexSet> out;
  out.reserve(blocks.size());
  for (auto& [rep, block] : blocks) out.emplace_back(std::move(block));
  return out;
}

bool components_disjoint(const RootSystem& rs, const IndexSet& a, const IndexSet& b) {
  if (!a.disjoint_with(b)) {
    throw std::invalid_argument("components_disjoint: sets overlap on " +
                                a.intersect(b).to_string());
  }
  for (const IndexSet& block : subdiagram_components(rs, a.unite(b))) {
    if (!block.disjoint_with(a) && !block.disjoint_with(b)) return false;
  }
  return true;
}

}  // namespace horocalc
