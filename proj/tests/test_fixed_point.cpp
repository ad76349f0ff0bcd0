#include <catch2/catch_amalgamated.hpp>

#include "emtree/combinatorics.hpp"
#include "emtree/fixed_point.hpp"
#include "emtree/series.hpp"

using emtree::catalan;
using emtree::fixed_point_solve;
using emtree::fixed_point_solve_progressive;
using emtree::FixedPointError;
using emtree::Int;
using emtree::Rational;
using emtree::Series;

namespace {

// g = 1 + z g^2, the Catalan series.
Series catalan_step(const Series& x) {
  auto one = Series::constant(Rational(1), x.order());
  return one + (x * x).shift_up(1);
}

// t = 1 + z t^3, the ternary tree series.
Series ternary_step(const Series& x) {
  auto one = Series::constant(Rational(1), x.order());
  return one + (x * x * x).shift_up(1);
}

}  // namespace

TEST_CASE("plain and progressive solvers agree") {
  long N = 12;
  auto seed = Series::constant(Rational(1), N);

  auto plain = fixed_point_solve(catalan_step, seed);
  auto prog = fixed_point_solve_progressive(catalan_step, seed);
  REQUIRE(plain == prog);

  for (long n = 0; n <= N; ++n)
    REQUIRE(plain.coeff(n) == Rational(catalan(n)));
}

TEST_CASE("solution satisfies its equation exactly") {
  long N = 15;
  auto seed = Series::constant(Rational(1), N);
  auto t = fixed_point_solve_progressive(ternary_step, seed);

  REQUIRE(ternary_step(t) == t);

  // Coefficients are C(3n, n) / (2n + 1).
  for (long n = 0; n <= N; ++n) {
    Rational expect = Rational(emtree::binomial(Int(3 * n), Int(n))) /
                      Rational(2 * n + 1);
    REQUIRE(t.coeff(n) == expect);
  }
  Rational frozen[] = {Rational(1),   Rational(1),   Rational(3),  Rational(12),
                       Rational(55),  Rational(273), Rational(1428)};
  for (long n = 0; n <= 6; ++n) REQUIRE(t.coeff(n) == frozen[n]);
}

TEST_CASE("non-contracting maps are rejected") {
  auto seed = Series::constant(Rational(0), 6);

  SECTION("translation never settles") {
    auto step = [](const Series& x) {
      return x + Series::constant(Rational(1), x.order());
    };
    REQUIRE_THROWS_AS(fixed_point_solve(step, seed), FixedPointError);
  }

  SECTION("progressive solver rejects a wrong seed") {
    auto bad_seed = Series::constant(Rational(5), 6);
    REQUIRE_THROWS_AS(fixed_point_solve_progressive(ternary_step, bad_seed),
                      FixedPointError);
  }

  SECTION("plain solver tolerates a zero seed") {
    // The first iterate already fixes the constant term, so plain iteration
    // still contracts.
    auto sol = fixed_point_solve(catalan_step, Series(6));
    REQUIRE(sol.coeff(4) == Rational(catalan(4)));
  }
}
