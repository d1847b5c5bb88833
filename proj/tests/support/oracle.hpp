#pragma once

// Exhaustive reference solvers for tiny instances. Test-only.

#include <cstddef>

#include "grf/cost.hpp"
#include "grf/matching.hpp"
#include "grf/model.hpp"

namespace grf::oracle {

inline constexpr std::size_t kMaxClades = 10;

/// Enumerates every injective partial map from c1 into c2 (only arboreal
/// ones when asked) and returns a cheapest, by direct summation of pair and
/// gap costs. The first cheapest in enumeration order wins ties. Throws
/// TooLarge when either side has more than kMaxClades clades.
Matching brute_force_best(const CladeSet& c1, const CladeSet& c2, const CostFn& f,
                          bool require_arboreal);

}  // namespace grf::oracle
