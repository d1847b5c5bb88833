#include "grf/rf.hpp"

#include <unordered_set>

namespace grf {

std::size_t common_clades(const CladeSet& c1, const CladeSet& c2) {
  require_same_taxa(c1, c2);
  std::unordered_set<Clade, CladeHash> first(c1.clades.begin(), c1.clades.end());
  std::size_t shared = 0;
  for (const auto& c : c2.clades) shared += first.count(c);
  return shared;
}

std::size_t rf_distance(const CladeSet& c1, const CladeSet& c2) {
  return c1.size() + c2.size() - 2 * common_clades(c1, c2);
}

std::size_t rf_distance(const Tree& t1, const Tree& t2) {
  require_same_taxa(t1, t2);
  return rf_distance(extract_clades(t1), extract_clades(t2));
}

}  // namespace grf
