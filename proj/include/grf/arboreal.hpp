#pragma once

// Exact anytime solver for minimum-cost arboreal bipartite matching.
//
// The problem is the 0/1 program
//
//   max  sum w(i,j) x(i,j)
//   s.t. each clade of either tree matched at most once
//        x(i,j) + x(k,l) <= 1  for every conflicting pair {(i,j), (k,l)}
//
// solved by best-first branch and bound. The relaxation at a node drops the
// conflict rows and is a plain assignment problem; conflict rows are never
// materialised, they are checked on demand with the model's conflict
// predicate.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <string_view>

#include "grf/cost.hpp"
#include "grf/matching.hpp"
#include "grf/model.hpp"

namespace grf {

enum class SolveStatus { Optimal, FeasibleTimeout, InfeasibleNever };

std::string_view to_string(SolveStatus status) noexcept;

struct SolveParams {
  std::chrono::duration<double> time_limit{0};  // zero: unlimited
  std::uint64_t node_limit = 0;                 // zero: unlimited
  double tolerance = kDefaultTolerance;
  const std::atomic<bool>* cancel = nullptr;
  /// Called with (lower, upper) weight bounds whenever either one moves.
  std::function<void(double, double)> on_bounds;
};

/// Bounds are on the total matched weight; cost bounds follow from the cost
/// of the empty matching.
struct SolveResult {
  Matching incumbent;
  double lower_bound = 0.0;
  double upper_bound = 0.0;
  double empty_cost = 0.0;
  SolveStatus status = SolveStatus::Optimal;
  double gap_percent = 0.0;  // +inf when the lower bound is zero and the gap is open
  std::uint64_t nodes_explored = 0;
  std::chrono::duration<double> wall_time{0};

  double cost_lower() const { return empty_cost - upper_bound; }
  double cost_upper() const { return empty_cost - lower_bound; }
  bool optimal() const { return status == SolveStatus::Optimal; }
};

/// 100 * (upper - lower) / lower; zero once the bounds meet within
/// `tolerance`, +inf for an open gap over a zero lower bound.
double gap_percent(double lower, double upper, double tolerance = kDefaultTolerance);

SolveResult solve(const CladeSet& c1, const CladeSet& c2, const CostFn& f,
                  const SolveParams& params = {});

struct GrfDistance {
  double cost_lower = 0.0;
  double cost_upper = 0.0;
  SolveResult result;
};

/// Generalized Robinson-Foulds distance under `f`; cost_lower == cost_upper
/// when the solve finished.
GrfDistance grf_distance(const Tree& t1, const Tree& t2, const CostFn& f,
                         const SolveParams& params = {});

}  // namespace grf
