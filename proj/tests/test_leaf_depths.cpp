#include <catch2/catch_amalgamated.hpp>

#include "emtree/leaf_depths.hpp"
#include "emtree/oracle.hpp"

using namespace emtree;

TEST_CASE("size one by hand: one leaf in each slot") {
  REQUIRE(ternary_leaf_depth_count(1, 0, 1, 0, 0) == 1);
  REQUIRE(ternary_leaf_depth_count(1, 1, 0, 1, 0) == 1);
  REQUIRE(ternary_leaf_depth_count(1, 2, 0, 0, 1) == 1);
  REQUIRE(ternary_leaf_depth_count(1, 0, 0, 1, 0) == 0);
  REQUIRE(ternary_leaf_depth_count(0, 0, 0, 0, 0) == 1);
  REQUIRE(ternary_leaf_depth_count(0, 1, 0, 0, 0) == 0);
  REQUIRE(dary_leaf_depth_count(3, 2, 4, {0, 0, 1}) == 2);
}

TEST_CASE("ternary closed route equals the product route on the full grid") {
  for (long n = 0; n <= 5; ++n)
    for (long m1 = 0; m1 <= n; ++m1)
      for (long m2 = 0; m1 + m2 <= n; ++m2)
        for (long m3 = 0; m1 + m2 + m3 <= n; ++m3)
          for (long s = 0; s <= 2 * n; ++s) {
            Int closed = ternary_leaf_depth_count(n, s, m1, m2, m3);
            Int product = dary_leaf_depth_count(3, n, s, {m1, m2, m3});
            REQUIRE(closed == product);
          }
}

TEST_CASE("tables match brute-force enumeration") {
  for (int d : {2, 3})
    for (long n = 0; n <= 5; ++n) {
      auto formula = leaf_depth_table(d, n);
      auto oracle = oracle_leaf_depth_table(d, n);
      REQUIRE(formula == oracle);
      for (const auto& [key, c] : formula) REQUIRE(c > 0);
    }
}

TEST_CASE("every leaf of every tree is counted once") {
  for (int d : {2, 3, 4})
    for (long n = 0; n <= 6; ++n) {
      Int total(0);
      for (const auto& [key, c] : leaf_depth_table(d, n)) total += c;
      REQUIRE(total == Int((d - 1) * n + 1) * dary_tree_count(d, n));
    }
}

TEST_CASE("left-right mirror symmetry") {
  for (long n = 0; n <= 5; ++n)
    for (long m1 = 0; m1 <= n; ++m1)
      for (long m2 = 0; m1 + m2 <= n; ++m2)
        for (long m3 = 0; m1 + m2 + m3 <= n; ++m3)
          for (long s = 0; s <= 2 * n; ++s)
            REQUIRE(ternary_leaf_depth_count(n, s, m1, m2, m3) ==
                    ternary_leaf_depth_count(n, 2 * n - s, m3, m2, m1));
}

TEST_CASE("distribution over leaves is a probability") {
  for (auto [d, n] : {std::pair<int, long>{3, 5}, {2, 6}, {4, 4}}) {
    Rational total(0);
    for (const auto& [key, p] : leaf_depth_distribution(d, n)) {
      REQUIRE(p > Rational(0));
      total += p;
    }
    REQUIRE(total == Rational(1));
  }
}

TEST_CASE("profile guards") {
  REQUIRE_THROWS_AS(dary_leaf_depth_count(3, 2, 1, {0, 0}), TreeError);
  REQUIRE_THROWS_AS(dary_leaf_depth_count(1, 2, 1, {0}), TreeError);
  REQUIRE(dary_leaf_depth_count(3, 2, 9, {0, 0, 1}) == 0);
  REQUIRE(dary_leaf_depth_count(3, -1, 0, {0, 0, 0}) == 0);
  REQUIRE(dary_leaf_depth_count(3, 2, 1, {-1, 1, 0}) == 0);
}
