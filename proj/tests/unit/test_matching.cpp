#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "grf/arboreal.hpp"
#include "grf/error.hpp"
#include "grf/matching.hpp"
#include "grf/rf.hpp"
#include "oracle.hpp"
#include "random_trees.hpp"
#include "set_oracle.hpp"

using namespace grf;

namespace {

// Best total over all injective maps of the smaller side, by permutation.
double brute_assignment(const std::vector<double>& w, std::size_t rows, std::size_t cols) {
  const bool flip = rows > cols;
  const std::size_t r = flip ? cols : rows, c = flip ? rows : cols;
  auto at = [&](std::size_t i, std::size_t j) { return flip ? w[j * cols + i] : w[i * cols + j]; };
  std::vector<std::size_t> perm(c);
  std::iota(perm.begin(), perm.end(), 0);
  double best = 0.0;
  do {
    double s = 0.0;
    for (std::size_t i = 0; i < r; ++i) s += at(i, perm[i]);
    best = std::max(best, s);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

Clade clade(std::size_t n, std::initializer_list<std::size_t> one_based) {
  Clade c(n);
  for (auto t : one_based) c.insert(t - 1);
  return c;
}

}  // namespace

TEST_CASE("assignment agrees with permutation search") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int round = 0; round < 300; ++round) {
    const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
    std::vector<double> w(rows * cols);
    for (auto& x : w) x = (rng() % 4 == 0) ? 0.0 : u(rng);
    const auto a = max_weight_assignment(w, rows, cols);
    REQUIRE(a.size() == rows);
    double total = 0.0;
    std::vector<bool> used(cols, false);
    for (std::size_t i = 0; i < rows; ++i) {
      if (a[i] == kUnassigned) continue;
      REQUIRE(a[i] < cols);
      CHECK_FALSE(used[a[i]]);
      used[a[i]] = true;
      total += w[i * cols + a[i]];
    }
    CHECK(total == doctest::Approx(brute_assignment(w, rows, cols)).epsilon(1e-12));
  }
  CHECK(max_weight_assignment({}, 0, 3).empty());
}

TEST_CASE("free matching on the fixture takes the conflicting pair") {
  auto [t1, t2] = testing::caterpillar_fixture();
  const auto c1 = extract_clades(t1), c2 = extract_clades(t2);
  const auto m = min_cost_matching(c1, c2, CostFn::symdiff());
  CHECK(m.cost == doctest::Approx(9.0).epsilon(1e-12));
  const auto a2 = std::find(c1.clades.begin(), c1.clades.end(), clade(10, {1, 2})) - c1.clades.begin();
  const auto b = std::find(c2.clades.begin(), c2.clades.end(), clade(10, {1, 10})) - c2.clades.begin();
  const std::pair<std::size_t, std::size_t> pair{static_cast<std::size_t>(a2), static_cast<std::size_t>(b)};
  CHECK(std::find(m.pairs.begin(), m.pairs.end(), pair) != m.pairs.end());
  CHECK(count_violations(m, c1, c2) == 7);
  CHECK(testing::count_conflicts_by_sets(m.pairs, c1, c2) == 7);
  CHECK(m.cost == doctest::Approx(matching_cost(CostFn::symdiff(), m.pairs, c1, c2)).epsilon(1e-12));
}

TEST_CASE("identical trees match to zero") {
  std::mt19937_64 rng(19);
  const auto taxa = testing::make_taxa(15);
  const auto t = testing::random_tree(taxa, rng, 0.2);
  const auto c = extract_clades(t);
  for (const auto& f : {CostFn::rf(), CostFn::symdiff(), CostFn::jaccard(1), CostFn::jaccard(4)}) {
    const auto m = min_cost_matching(c, c, f);
    CHECK(m.cost == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(m.size() == c.size());
    CHECK(count_violations(m, c, c) == 0);
  }
}

TEST_CASE("free matching equals the exhaustive optimum on small trees") {
  std::mt19937_64 rng(23);
  for (int round = 0; round < 60; ++round) {
    const auto taxa = testing::make_taxa(4 + rng() % 4);
    const auto a = testing::random_tree(taxa, rng, 0.2), b = testing::random_tree(taxa, rng, 0.2);
    const auto c1 = extract_clades(a), c2 = extract_clades(b);
    for (const auto& f : {CostFn::symdiff(), CostFn::jaccard(1), CostFn::jaccard(3)}) {
      const auto m = min_cost_matching(c1, c2, f);
      const auto best = oracle::brute_force_best(c1, c2, f, false);
      CHECK(m.cost == doctest::Approx(best.cost).epsilon(1e-9));
    }
  }
}

TEST_CASE("free RF matching reproduces RF") {
  std::mt19937_64 rng(29);
  for (int round = 0; round < 100; ++round) {
    const auto taxa = testing::make_taxa(3 + rng() % 18);
    const auto a = testing::random_tree(taxa, rng, 0.2), b = testing::random_tree(taxa, rng, 0.2);
    const auto c1 = extract_clades(a), c2 = extract_clades(b);
    const auto m = min_cost_matching(c1, c2, CostFn::rf());
    CHECK(m.cost == static_cast<double>(rf_distance(c1, c2)));
    CHECK(count_violations(m, c1, c2) == 0);
  }
}

TEST_CASE("free cost never exceeds arboreal cost") {
  std::mt19937_64 rng(31);
  for (int round = 0; round < 40; ++round) {
    const auto taxa = testing::make_taxa(4 + rng() % 9);
    const auto a = testing::random_tree(taxa, rng, 0.1), b = testing::random_tree(taxa, rng, 0.1);
    const auto c1 = extract_clades(a), c2 = extract_clades(b);
    for (const auto& f : {CostFn::symdiff(), CostFn::jaccard(1)}) {
      const auto free = min_cost_matching(c1, c2, f);
      const auto arb = solve(c1, c2, f);
      REQUIRE(arb.optimal());
      CHECK(free.cost <= arb.cost_upper() + 1e-9);
      CHECK(free.cost == doctest::Approx(matching_cost(f, free.pairs, c1, c2)).epsilon(1e-9));
    }
  }
}

TEST_CASE("violation counting") {
  const std::size_t n = 10;
  CladeSet c1{testing::make_taxa(n), {}, {}};
  CladeSet c2 = c1;
  c1.clades = {clade(n, {1, 2}), clade(n, {1, 2, 3})};
  c2.clades = {clade(n, {1, 10}), clade(n, {2, 3})};
  const PairList m{{0, 0}, {1, 1}};
  CHECK(count_violations(m, c1, c2) == 1);
  CHECK(count_violations(PairList{{0, 1}, {1, 0}}, c1, c2) == 1);
  CHECK(count_violations(PairList{{0, 0}}, c1, c2) == 0);
}

TEST_CASE("make_matching validates and totals") {
  auto [t1, t2] = testing::caterpillar_fixture();
  const auto c1 = extract_clades(t1), c2 = extract_clades(t2);
  const auto f = CostFn::jaccard(2);
  const auto m = make_matching({{3, 2}, {0, 0}}, f, c1, c2);
  CHECK(m.pairs.front().first == 0);
  CHECK(m.cost + m.weight_sum == doctest::Approx(empty_matching_cost(f, c1, c2)).epsilon(1e-12));
  CHECK_THROWS_AS(make_matching({{0, 0}, {0, 1}}, f, c1, c2), Error);
}
