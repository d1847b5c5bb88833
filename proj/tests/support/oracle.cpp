#include "oracle.hpp"

#include "grf/error.hpp"

namespace grf::oracle {
namespace {

struct Enumerator {
  const CladeSet& c1;
  const CladeSet& c2;
  const CostFn& f;
  bool arboreal;

  PairList current;
  std::vector<char> used;
  PairList best;
  double best_cost = kInfinity;

  bool fits(std::size_t i, std::size_t j) const {
    if (!arboreal) return true;
    for (const auto& [k, l] : current)
      if (conflict(c1[i], c2[j], c1[k], c2[l])) return false;
    return true;
  }

  void visit(std::size_t i) {
    if (i == c1.size()) {
      const double cost = matching_cost(f, current, c1, c2);
      if (cost < best_cost - 1e-12) {
        best_cost = cost;
        best = current;
      }
      return;
    }
    visit(i + 1);  // gap first
    for (std::size_t j = 0; j < c2.size(); ++j) {
      if (used[j] || !fits(i, j)) continue;
      used[j] = 1;
      current.emplace_back(i, j);
      visit(i + 1);
      current.pop_back();
      used[j] = 0;
    }
  }
};

}  // namespace

Matching brute_force_best(const CladeSet& c1, const CladeSet& c2, const CostFn& f,
                          bool require_arboreal) {
  if (c1.size() > kMaxClades || c2.size() > kMaxClades)
    throw Error(ErrorCode::TooLarge, "brute force is limited to 10 clades per tree");
  Enumerator e{c1, c2, f, require_arboreal, {}, std::vector<char>(c2.size(), 0), {}, kInfinity};
  e.visit(0);

  Matching m;
  m.pairs = e.best;
  m.cost = e.best_cost;
  for (const auto& [i, j] : m.pairs) m.weight_sum += weight(f, c1[i], c2[j]);
  return m;
}

}  // namespace grf::oracle
