#include <doctest.h>

#include <random>

#include "grf/error.hpp"
#include "grf/newick.hpp"
#include "grf/rf.hpp"
#include "random_trees.hpp"

using namespace grf;

TEST_CASE("fixture trees are at maximum RF distance") {
  auto [t1, t2] = testing::caterpillar_fixture();
  CHECK(rf_distance(t1, t2) == 16);
  CHECK(rf_distance(t1, t1) == 0);
  CHECK(common_clades(extract_clades(t1), extract_clades(t2)) == 0);
}

TEST_CASE("three-taxon trees") {
  auto [a, b] = testing::parse_pair("((A,B),C);", "(A,(B,C));");
  CHECK(rf_distance(a, b) == 2);
  auto [c, d] = testing::parse_pair("((A,B),C);", "(A,B,C);");
  CHECK(rf_distance(c, d) == 1);
}

TEST_CASE("different taxa are rejected") {
  const auto a = newick::parse("((A,B),C);"), b = newick::parse("((A,B),D);");
  CHECK_THROWS_WITH_AS(rf_distance(a.trees[0], b.trees[0]), doctest::Contains("TaxaMismatch"),
                       Error);
}

TEST_CASE("RF is symmetric and bounded on random trees") {
  std::mt19937_64 rng(13);
  for (int round = 0; round < 200; ++round) {
    const auto n = 3 + rng() % 30;
    const auto taxa = testing::make_taxa(n);
    const auto a = testing::random_tree(taxa, rng, 0.2);
    const auto b = testing::random_tree(taxa, rng, 0.2);
    const auto d = rf_distance(a, b);
    CHECK(d == rf_distance(b, a));
    CHECK(d <= 2 * (n - 2));
    const auto ca = extract_clades(a), cb = extract_clades(b);
    CHECK(d == ca.size() + cb.size() - 2 * common_clades(ca, cb));
  }
}
