#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "linsys/linsys.hpp"

namespace testing {

inline linsys::LinearSystem fano() {
  return linsys::LinearSystem(
      7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
}

// Applies a point permutation and returns the sorted line set.
inline std::set<linsys::Line> relabel(const linsys::LinearSystem& s,
                                      const std::vector<linsys::Point>& perm) {
  std::set<linsys::Line> out;
  for (const auto& l : s.lines()) {
    linsys::Line m;
    for (auto p : l) m.push_back(perm[p]);
    std::sort(m.begin(), m.end());
    out.insert(m);
  }
  return out;
}

// Tries every point bijection. Only for tiny systems.
inline bool brute_isomorphic(const linsys::LinearSystem& a, const linsys::LinearSystem& b) {
  if (a.num_points() != b.num_points() || a.num_lines() != b.num_lines()) return false;
  const std::set<linsys::Line> target(b.lines().begin(), b.lines().end());
  std::vector<linsys::Point> perm(a.num_points());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (relabel(a, perm) == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline linsys::LinearSystem random_system(std::uint64_t seed) {
  return linsys::random_corpus_instance(linsys::RandomFamily{}, seed);
}

}  // namespace testing
