#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "emtree/ternary_gf.hpp"
#include "emtree/trees.hpp"

using namespace emtree;
using Catch::Approx;

TEST_CASE("tree series for small arities") {
  auto t3 = tree_series(3, 6);
  long frozen3[] = {1, 1, 3, 12, 55, 273, 1428};
  for (long n = 0; n <= 6; ++n) REQUIRE(t3.coeff(n) == Rational(frozen3[n]));

  auto t2 = tree_series(2, 5);
  long frozen2[] = {1, 1, 2, 5, 14, 42};
  for (long n = 0; n <= 5; ++n) REQUIRE(t2.coeff(n) == Rational(frozen2[n]));

  // Coefficients of T are C(dn, n) / ((d-1)n + 1).
  for (int d : {2, 3, 4, 5})
    for (long n = 0; n <= 10; ++n)
      REQUIRE(tree_series(d, 10).coeff(n) == Rational(dary_tree_count(d, n)));
}

TEST_CASE("nonempty tree series and its square") {
  auto tt = nonempty_tree_series(3, 8);
  REQUIRE(tt.coeff(0) == Rational(0));
  for (long n = 1; n <= 8; ++n) {
    Rational expect = Rational(binomial(Int(3) * n, Int(n))) / Rational(2 * n + 1);
    REQUIRE(tt.coeff(n) == expect);
  }
  auto sq = tt * tt;
  long frozen[] = {0, 0, 1, 6, 33};
  for (long n = 0; n <= 4; ++n) REQUIRE(sq.coeff(n) == Rational(frozen[n]));
}

TEST_CASE("characteristic root series") {
  long N = 30;
  auto x = char_root_series(N);

  SECTION("frozen low-order coefficients, all nonnegative") {
    long frozen[] = {0, 1, 3, 13, 64, 338, 1866};
    for (long n = 0; n <= 6; ++n) REQUIRE(x.coeff(n) == Rational(frozen[n]));
    for (long n = 0; n <= N; ++n) REQUIRE(x.coeff(n) >= Rational(0));
    REQUIRE(x.valuation() == 1);
  }

  SECTION("defining equation holds") {
    auto one = Series::constant(Rational(1), N);
    auto num = pow(one + x + x * x, 3);
    auto den = pow(one + x * x, 2);
    REQUIRE((num / den).shift_up(1) == x);
  }

  SECTION("all three routes agree") {
    REQUIRE(char_root_series_sqrt(20) == char_root_series(20));
    REQUIRE(char_root_series_catalan(20) == char_root_series(20));
  }

  SECTION("rational expressions of T through X") {
    auto one = Series::constant(Rational(1), N);
    auto t = tree_series(3, N);
    auto tt = t - one;
    REQUIRE((one + x + x * x) / (one + x * x) == t);
    REQUIRE((t * t).shift_up(1) == x / (one + x + x * x));
    REQUIRE((t * t * t).shift_up(1) == x / (one + x * x));
    REQUIRE((one + x * x) * tt == x);
  }
}

TEST_CASE("tree power coefficients by three routes") {
  for (int d : {2, 3, 4})
    for (long n = 0; n <= 12; ++n)
      for (long k = 0; k <= 5; ++k) {
        Int a = tree_power_coeff(d, n, k);
        REQUIRE(a == tree_power_coeff_expanded(d, n, k));
        REQUIRE(a == tree_power_coeff_series(d, n, k));
      }

  SECTION("edge cases") {
    REQUIRE(tree_power_coeff(3, 0, 0) == 1);
    REQUIRE(tree_power_coeff(3, 3, 0) == 0);
    REQUIRE(tree_power_coeff(3, -1, 2) == 0);
    REQUIRE(tree_power_coeff(3, 2, -1) == 0);
    REQUIRE(tree_power_coeff(3, 1, 1) == 1);
  }

  SECTION("nonempty powers match series arithmetic") {
    auto tt = nonempty_tree_series(3, 10);
    for (long k = 0; k <= 4; ++k) {
      auto p = pow(tt, k);
      for (long n = 0; n <= 10; ++n)
        REQUIRE(Rational(nonempty_power_coeff(3, n, k)) == p.coeff(n));
    }
  }
}

TEST_CASE("real evaluation inside the disk of convergence") {
  auto partial = nonempty_tree_series(3, 40);

  for (double z : {0.05, -0.05}) {
    double series_val = partial.eval_double(z);
    REQUIRE(cardano_eval(z) == Approx(series_val).margin(1e-12));
  }
  // The order-40 tail is larger at |z| = 0.1, so the tolerance is looser.
  for (double z : {0.1, -0.1}) {
    double series_val = partial.eval_double(z);
    REQUIRE(cardano_eval(z) == Approx(series_val).margin(1e-6));
  }

  REQUIRE(cardano_eval(0.0) == 0.0);
  REQUIRE(cardano_eval(4.0 / 27.0) == Approx(0.5).margin(1e-7));
  REQUIRE_THROWS_AS(cardano_eval(0.2), std::domain_error);
  REQUIRE_THROWS_AS(cardano_eval(-0.2), std::domain_error);
}
