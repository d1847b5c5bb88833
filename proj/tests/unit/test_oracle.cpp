#include <doctest.h>

#include <random>

#include "grf/error.hpp"
#include "oracle.hpp"
#include "random_trees.hpp"
#include "set_oracle.hpp"

using namespace grf;

TEST_CASE("empty clade sets") {
  const auto doc = testing::parse_pair("(A,B,C);", "((A,B),C);");
  const auto c1 = extract_clades(doc.first), c2 = extract_clades(doc.second);
  const auto m = oracle::brute_force_best(c1, c2, CostFn::symdiff(), true);
  CHECK(m.empty());
  CHECK(m.cost == 2.0);
}

TEST_CASE("oracle refuses large instances") {
  std::mt19937_64 rng(71);
  const auto taxa = testing::make_taxa(15);
  const auto a = testing::random_binary_tree(taxa, rng);
  const auto c = extract_clades(a);
  CHECK_THROWS_AS(oracle::brute_force_best(c, c, CostFn::rf(), false), Error);
}

TEST_CASE("oracle on the fixture") {
  auto [t1, t2] = testing::caterpillar_fixture();
  const auto c1 = extract_clades(t1), c2 = extract_clades(t2);
  const auto free = oracle::brute_force_best(c1, c2, CostFn::symdiff(), false);
  const auto arb = oracle::brute_force_best(c1, c2, CostFn::symdiff(), true);
  CHECK(free.cost == 9.0);
  CHECK(arb.cost == 11.0);
  CHECK(testing::count_conflicts_by_sets(arb.pairs, c1, c2) == 0);
  CHECK(oracle::brute_force_best(c1, c2, CostFn::rf(), true).cost == 16.0);
}
