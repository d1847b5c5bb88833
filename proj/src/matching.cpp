#include "grf/matching.hpp"

#include <algorithm>

#include "grf/error.hpp"

namespace grf {

Matching make_matching(PairList pairs, const CostFn& f, const CladeSet& c1, const CladeSet& c2) {
  std::sort(pairs.begin(), pairs.end());
  std::vector<char> used1(c1.size(), 0), used2(c2.size(), 0);
  Matching m;
  for (const auto& [i, j] : pairs) {
    if (i >= c1.size() || j >= c2.size())
      throw Error(ErrorCode::InvalidMatching, "pair index out of range");
    if (used1[i] || used2[j]) throw Error(ErrorCode::InvalidMatching, "clade matched twice");
    used1[i] = used2[j] = 1;
    m.weight_sum += weight(f, c1[i], c2[j]);
  }
  m.pairs = std::move(pairs);
  m.cost = empty_matching_cost(f, c1, c2) - m.weight_sum;
  return m;
}

std::vector<std::size_t> max_weight_assignment(std::span<const double> weights, std::size_t rows,
                                               std::size_t cols) {
  std::vector<std::size_t> result(rows, kUnassigned);
  if (rows == 0 || cols == 0) return result;

  // The potential method below needs n <= m; solve the transpose otherwise.
  const bool transposed = rows > cols;
  const std::size_t n = transposed ? cols : rows;
  const std::size_t m = transposed ? rows : cols;
  auto cost = [&](std::size_t i, std::size_t j) {  // 1-based, minimised
    return transposed ? -weights[(j - 1) * cols + (i - 1)] : -weights[(i - 1) * cols + (j - 1)];
  };

  constexpr double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(m + 1, 0.0);
  std::vector<std::size_t> p(m + 1, 0), way(m + 1, 0);
  std::vector<double> minv(m + 1);
  std::vector<char> used(m + 1);

  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::fill(minv.begin(), minv.end(), inf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = p[j0];
      double best = inf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= m; ++j) {
        if (used[j]) continue;
        const double cur = cost(i0, j) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < best) {
          best = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= m; ++j) {
        if (used[j]) {
          u[p[j]] += best;
          v[j] -= best;
        } else {
          minv[j] -= best;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  for (std::size_t j = 1; j <= m; ++j) {
    if (p[j] == 0) continue;
    if (transposed)
      result[j - 1] = p[j] - 1;
    else
      result[p[j] - 1] = j - 1;
  }
  return result;
}

Matching min_cost_matching(const CladeSet& c1, const CladeSet& c2, const CostFn& f,
                           double tolerance) {
  require_same_taxa(c1, c2);
  const auto rows = c1.size(), cols = c2.size();
  std::vector<double> w(rows * cols, 0.0);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      const double x = weight(f, c1[i], c2[j]);
      w[i * cols + j] = x > tolerance ? x : 0.0;
    }

  const auto assign = max_weight_assignment(w, rows, cols);
  PairList pairs;
  for (std::size_t i = 0; i < rows; ++i)
    if (assign[i] != kUnassigned && w[i * cols + assign[i]] > 0.0) pairs.emplace_back(i, assign[i]);
  return make_matching(std::move(pairs), f, c1, c2);
}

std::size_t count_violations(std::span<const std::pair<std::size_t, std::size_t>> pairs,
                             const CladeSet& c1, const CladeSet& c2) {
  std::size_t count = 0;
  for (std::size_t a = 0; a < pairs.size(); ++a)
    for (std::size_t b = a + 1; b < pairs.size(); ++b) {
      const auto [i, j] = pairs[a];
      const auto [k, l] = pairs[b];
      if (conflict(c1.clades.at(i), c2.clades.at(j), c1.clades.at(k), c2.clades.at(l))) ++count;
    }
  return count;
}

}  // namespace grf
