#pragma once

// Conflict conditions restated over std::set, independent of the bitset code.

#include <algorithm>
#include <cstddef>
#include <set>
#include <utility>
#include <vector>

#include "grf/model.hpp"

namespace grf::testing {

using TaxonSet = std::set<std::size_t>;

inline TaxonSet to_set(const Clade& c) {
  const auto m = c.members();
  return TaxonSet(m.begin(), m.end());
}

inline bool subset(const TaxonSet& a, const TaxonSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline bool disjoint(const TaxonSet& a, const TaxonSet& b) {
  std::vector<std::size_t> both;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
  return both.empty();
}

/// (y1, y2) and (z1, z2) are matched pairs; index 1 from the first tree.
inline bool sets_conflict(const TaxonSet& y1, const TaxonSet& y2, const TaxonSet& z1,
                          const TaxonSet& z2) {
  const bool nested_down = subset(y1, z1) && subset(y2, z2);
  const bool nested_up = subset(z1, y1) && subset(z2, y2);
  const bool apart = disjoint(y1, z1) && disjoint(y2, z2);
  return !(nested_down || nested_up || apart);
}

inline std::size_t count_conflicts_by_sets(const std::vector<std::pair<std::size_t, std::size_t>>& m,
                                           const CladeSet& c1, const CladeSet& c2) {
  std::size_t n = 0;
  for (std::size_t a = 0; a < m.size(); ++a)
    for (std::size_t b = a + 1; b < m.size(); ++b)
      n += sets_conflict(to_set(c1[m[a].first]), to_set(c2[m[a].second]), to_set(c1[m[b].first]),
                         to_set(c2[m[b].second]));
  return n;
}

}  // namespace grf::testing
