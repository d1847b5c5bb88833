#pragma once

#include <cstddef>

#include "grf/model.hpp"

namespace grf {

/// Classical Robinson-Foulds distance: the number of non-trivial clades found
/// in exactly one of the two trees. Throws TaxaMismatch.
std::size_t rf_distance(const Tree& t1, const Tree& t2);
std::size_t rf_distance(const CladeSet& c1, const CladeSet& c2);

/// Number of clades present in both sets.
std::size_t common_clades(const CladeSet& c1, const CladeSet& c2);

}  // namespace grf
