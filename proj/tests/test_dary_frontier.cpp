#include <catch2/catch_amalgamated.hpp>

#include "emtree/dary_frontier.hpp"

using namespace emtree;

TEST_CASE("laurent polynomial basics") {
  auto p = characteristic_poly(natural_offsets(3));
  REQUIRE(p.coeff(-1) == Rational(1));
  REQUIRE(p.coeff(0) == Rational(1));
  REQUIRE(p.coeff(1) == Rational(1));
  REQUIRE(p.coeff(2) == Rational(0));
  REQUIRE(p.min_exp() == -1);
  REQUIRE(p.max_exp() == 1);

  auto q = characteristic_poly({-1, -1, 2});
  REQUIRE(q.coeff(-1) == Rational(2));
  REQUIRE(q.coeff(2) == Rational(1));

  LaurentPoly r;
  r.add(3, Rational(5));
  r.add(3, Rational(-5));
  REQUIRE(r.is_zero());
  REQUIRE(r.str() == "0");

  SECTION("cleared evaluation at a series") {
    auto x = char_root_series(10);
    auto one = Series::constant(Rational(1), 10);
    // X^{+1} * (X^{-1} + 1 + X) = 1 + X + X^2.
    REQUIRE(p.eval_cleared(x) == one + x + x * x);
  }
}

TEST_CASE("kernel root exists exactly when the smallest offset is -1") {
  SECTION("ternary: the characteristic root") {
    auto rep = char_root_for(natural_offsets(3), 12);
    REQUIRE(rep.solvable);
    REQUIRE(rep.root == char_root_series(12));
  }

  SECTION("binary: matches the quadratic formula") {
    auto rep = char_root_for(natural_offsets(2), 12);
    REQUIRE(rep.solvable);
    REQUIRE(rep.root == binary_char_root_sqrt(12));
    long frozen[] = {0, 1, 1, 3, 8, 25};
    for (long n = 0; n <= 5; ++n)
      REQUIRE(rep.root.coeff(n) == Rational(frozen[n]));
  }

  SECTION("nonnegative offsets force the zero series") {
    auto rep = char_root_for({0, 1, 2}, 8);
    REQUIRE_FALSE(rep.solvable);
    REQUIRE(rep.diagnostic.find("zero series") != std::string::npos);
  }

  SECTION("offsets below -1 break the valuation bookkeeping") {
    auto rep = char_root_for({-2, 0, 2}, 8);
    REQUIRE_FALSE(rep.solvable);
    REQUIRE(rep.diagnostic.find("valuation 1/2") != std::string::npos);

    auto rep5 = char_root_for(natural_offsets(5), 8);
    REQUIRE_FALSE(rep5.solvable);
    REQUIRE(rep5.diagnostic.find("valuation 1/2") != std::string::npos);
  }

  SECTION("degenerate arity") {
    auto rep = char_root_for({-1}, 8);
    REQUIRE_FALSE(rep.solvable);
  }
}

TEST_CASE("closed family transplanted to wider embeddings") {
  for (long j : {-2L, 0L, 3L}) {
    auto rep = formal_family_check(1, j, 10);
    REQUIRE(rep.applicable);
    REQUIRE(rep.passed);
  }

  for (long d : {2L, 3L}) {
    auto rep = formal_family_check(d, 0, 8);
    REQUIRE_FALSE(rep.applicable);
    REQUIRE_FALSE(rep.passed);
    REQUIRE(rep.diagnostic.find("valuation") != std::string::npos);
  }

  auto bad = formal_family_check(0, 0, 8);
  REQUIRE_FALSE(bad.applicable);
  REQUIRE(bad.diagnostic.find(">= 1") != std::string::npos);
}
