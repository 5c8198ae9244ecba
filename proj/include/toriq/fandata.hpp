#pragma once

#include <algorithm>
#include <vector>

#include "toriq/exactmat.hpp"

namespace toriq {

using IndexSet = std::vector<std::size_t>;

// A fan over the columns of a fan matrix. Each maximal cone is stored by the
// sorted 0-based indices of its generating columns.
struct FanData {
  IntMatrix rays;
  std::vector<IndexSet> cones;

  std::size_t dim() const { return rays.rows(); }
  std::size_t size() const { return rays.cols(); }
};

inline IndexSet complement(const IndexSet& s, std::size_t m) {
  IndexSet out;
  for (std::size_t i = 0; i < m; ++i)
    if (!std::binary_search(s.begin(), s.end(), i)) out.push_back(i);
  return out;
}

// Cones written by their complementary index sets (the bunch convention) to generator sets.
inline std::vector<IndexSet> cones_from_complements(const std::vector<IndexSet>& comps, std::size_t m) {
  std::vector<IndexSet> out;
  for (auto c : comps) {
    std::sort(c.begin(), c.end());
    out.push_back(complement(c, m));
  }
  return out;
}

inline void sort_cones(std::vector<IndexSet>& cones) {
  for (auto& c : cones) std::sort(c.begin(), c.end());
  std::sort(cones.begin(), cones.end());
}

}  // namespace toriq
