#include <catch2/catch_amalgamated.hpp>

#include "emtree/oracle.hpp"
#include "emtree/small_labels.hpp"

using namespace emtree;

TEST_CASE("label bound 0: frozen values by three routes") {
  long frozen[] = {1, 1, 2, 6, 22, 91, 408};
  auto closed = max_label_series_closed(0, 6);
  auto system = max_label_series_system(0, 6);
  for (long n = 0; n <= 6; ++n) {
    REQUIRE(Rational(max_label0_coeff(n)) == Rational(frozen[n]));
    REQUIRE(closed.coeff(n) == Rational(frozen[n]));
    REQUIRE(system.coeff(n) == Rational(frozen[n]));
  }
}

TEST_CASE("label bound 1: frozen values by three routes") {
  long frozen[] = {1, 1, 3, 11, 46, 209, 1006};
  auto closed = max_label_series_closed(1, 6);
  auto system = max_label_series_system(1, 6);
  for (long n = 0; n <= 6; ++n) {
    REQUIRE(Rational(max_label1_coeff(n)) == Rational(frozen[n]));
    REQUIRE(closed.coeff(n) == Rational(frozen[n]));
    REQUIRE(system.coeff(n) == Rational(frozen[n]));
  }
}

TEST_CASE("closed and system routes agree for every bound") {
  for (long j = -1; j <= 8; ++j)
    REQUIRE(max_label_series_closed(j, 15) == max_label_series_system(j, 15));
}

TEST_CASE("label bound -1 admits only the empty tree") {
  auto s = max_label_series_closed(-1, 12);
  REQUIRE(s == Series::constant(Rational(1), 12));
  REQUIRE(max_label_series_system(-1, 12) == s);
  REQUIRE_THROWS_AS(max_label_series_closed(-2, 5), ArithmeticError);
  REQUIRE_THROWS_AS(max_label_series_system(-2, 5), ArithmeticError);
}

TEST_CASE("rational forms in T") {
  long N = 20;
  auto one = Series::constant(Rational(1), N);
  auto t = tree_series(3, N);

  // Bound 0: 3T - 1 - T^2.
  auto v0 = Rational(3) * t - one - t * t;
  REQUIRE(v0 == max_label_series_closed(0, N));

  // Bound 1: (T - 2) T^3 / (T^2 - 3T + 1).
  auto v1 = (t - Rational(2) * one) * t * t * t /
            (t * t - Rational(3) * t + one);
  REQUIRE(v1 == max_label_series_closed(1, N));
}

TEST_CASE("bounded series increase with the bound and converge to T") {
  long N = 12;
  auto t = tree_series(3, N);
  Series prev = max_label_series_closed(-1, N);
  for (long j = 0; j <= 12; ++j) {
    auto cur = max_label_series_closed(j, N);
    for (long n = 0; n <= N; ++n) {
      REQUIRE(cur.coeff(n) >= prev.coeff(n));
      REQUIRE(cur.coeff(n) <= t.coeff(n));
    }
    // A bound of n - 1 is invisible to trees with n internal nodes.
    for (long n = 0; n <= N; ++n)
      if (j >= n - 1) REQUIRE(cur.coeff(n) == t.coeff(n));
    prev = cur;
  }
  // One below the threshold the bound bites.
  for (long n = 2; n <= 8; ++n)
    REQUIRE(max_label_series_closed(n - 2, N).coeff(n) < t.coeff(n));
}

TEST_CASE("bounded counts match brute-force enumeration") {
  for (long j = 0; j <= 3; ++j) {
    auto sys = max_label_series_system(j, 6);
    auto closed = max_label_series_closed(j, 6);
    for (long n = 0; n <= 6; ++n) {
      Int expect = oracle_max_label_count(j, n);
      REQUIRE(sys.coeff(n) == Rational(expect));
      REQUIRE(closed.coeff(n) == Rational(expect));
    }
  }
}

TEST_CASE("one-parameter solution family") {
  for (long j : {-3L, -2L, -1L, 0L, 1L, 2L})
    REQUIRE(check_solution_family(j, 10));
}
