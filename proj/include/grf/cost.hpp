#pragma once

// Clade-pair dissimilarities with gap costs, the matched-edge weight transform
// and the cost of a matching.

#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "grf/model.hpp"

namespace grf {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();
inline constexpr int kMaxJaccardOrder = 1 << 20;

/// The gap symbol: a clade left without a counterpart.
struct Gap {};
inline constexpr Gap gap{};

class CostFn {
 public:
  enum class Kind { RfDelta, SymDiff, Jaccard };

  static CostFn rf() { return CostFn(Kind::RfDelta, 0); }
  static CostFn symdiff() { return CostFn(Kind::SymDiff, 0); }
  /// Throws InvalidArgument unless 1 <= order <= kMaxJaccardOrder.
  static CostFn jaccard(int order);

  /// Accepts "rf", "symdiff" and "jaccard:<k>".
  static CostFn parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  int order() const noexcept { return order_; }  // Jaccard only
  std::string name() const;

  friend bool operator==(const CostFn&, const CostFn&) = default;

 private:
  CostFn(Kind kind, int order) : kind_(kind), order_(order) {}
  Kind kind_;
  int order_;
};

double delta(const CostFn& f, const Clade& a, const Clade& b);
double delta(const CostFn& f, const Clade& a, Gap);
double delta(const CostFn& f, Gap, const Clade& b);
[[noreturn]] double delta(const CostFn& f, Gap, Gap);

/// w(a, b) = delta(a,-) + delta(-,b) - delta(a,b); an infinite pair cost
/// yields weight 0 (the pair is never worth matching).
double weight(const CostFn& f, const Clade& a, const Clade& b);

/// Pairs of (index into first clade set, index into second clade set).
using PairList = std::vector<std::pair<std::size_t, std::size_t>>;

/// Cost of the empty matching: every clade pays its gap cost.
double empty_matching_cost(const CostFn& f, const CladeSet& c1, const CladeSet& c2);

/// Cost of a matching summed pair by pair and gap by gap. Throws
/// InvalidMatching for repeated or out-of-range indices. Returns infinity if a
/// pair has infinite cost.
double matching_cost(const CostFn& f, std::span<const std::pair<std::size_t, std::size_t>> pairs,
                     const CladeSet& c1, const CladeSet& c2);

}  // namespace grf
