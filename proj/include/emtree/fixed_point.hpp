#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "emtree/rational.hpp"

namespace emtree {

/// Raised when a fixed-point iteration fails to stabilize, which indicates
/// the map is not a z-adic contraction (or the seed is inconsistent).
struct FixedPointError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Solve x = F(x) by plain iteration from the seed, at the seed's order N.
/// Each step must strictly increase the valuation of successive differences
/// (the contraction certificate); stabilization within N + 2 steps is
/// required. Returns the stabilized solution, which satisfies F(x) == x.
template <typename S, typename Fn>
S fixed_point_solve(Fn&& F, const S& seed) {
  const long N = seed.order();
  S x = seed;
  long last_gap = -1;
  for (long iter = 0; iter <= N + 2; ++iter) {
    S next = F(x).truncated(N);
    S diff = next - x;
    long gap = diff.valuation();
    if (gap > N) return next;  // stabilized: difference vanishes to order N
    if (gap <= last_gap)
      throw FixedPointError(
          "fixed point iteration is not contracting: successive differences "
          "at valuations " +
          std::to_string(last_gap) + " then " + std::to_string(gap));
    last_gap = gap;
    x = std::move(next);
  }
  throw FixedPointError("fixed point iteration did not stabilize within " +
                        std::to_string(N + 2) + " steps");
}

/// Progressive variant: step k works at truncation order min(k, N), so one
/// new coefficient is settled per step at roughly a third of the naive cost.
/// The result is verified against the full-order equation before returning.
template <typename S, typename Fn>
S fixed_point_solve_progressive(Fn&& F, const S& seed) {
  const long N = seed.order();
  S x = seed.truncated(0);
  if (F(x) != x)
    throw FixedPointError("fixed point seed is wrong at order zero");
  for (long k = 1; k <= N; ++k) x = F(x.truncated(k));
  if (F(x) != x)
    throw FixedPointError(
        "progressive fixed point failed full-order verification");
  return x;
}

}  // namespace emtree
