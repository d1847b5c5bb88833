#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "grf/cost.hpp"
#include "grf/model.hpp"

namespace grf {

inline constexpr double kDefaultTolerance = 1e-9;

/// Matched clade pairs by index, sorted by first index. `cost` is the total
/// cost of the matching and `weight_sum` the sum of pair weights; the two
/// always add up to the cost of the empty matching.
struct Matching {
  PairList pairs;
  double cost = 0.0;
  double weight_sum = 0.0;

  std::size_t size() const noexcept { return pairs.size(); }
  bool empty() const noexcept { return pairs.empty(); }
};

/// Builds a Matching from pairs, filling in weight_sum and cost.
/// Throws InvalidMatching for repeated or out-of-range indices.
Matching make_matching(PairList pairs, const CostFn& f, const CladeSet& c1, const CladeSet& c2);

inline constexpr std::size_t kUnassigned = std::numeric_limits<std::size_t>::max();

/// Maximum-weight assignment on a dense row-major matrix of non-negative
/// weights, by shortest augmenting paths with dual potentials. Returns the
/// column for each row; rows end up unassigned only when rows > cols. Callers
/// drop zero-weight assignments themselves.
std::vector<std::size_t> max_weight_assignment(std::span<const double> weights, std::size_t rows,
                                               std::size_t cols);

/// Minimum-cost matching without the arboreal constraint. Pairs whose weight
/// is at most `tolerance` are never matched; the default keeps every pair of
/// positive weight so conflict counts reflect the exact optimum.
Matching min_cost_matching(const CladeSet& c1, const CladeSet& c2, const CostFn& f,
                           double tolerance = 0.0);

/// Number of unordered pairs of matched pairs that are in conflict.
std::size_t count_violations(std::span<const std::pair<std::size_t, std::size_t>> pairs,
                             const CladeSet& c1, const CladeSet& c2);

inline std::size_t count_violations(const Matching& m, const CladeSet& c1, const CladeSet& c2) {
  return count_violations(m.pairs, c1, c2);
}

}  // namespace grf
