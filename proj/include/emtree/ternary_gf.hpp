#pragma once

#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>

#include "emtree/combinatorics.hpp"
#include "emtree/fixed_point.hpp"
#include "emtree/series.hpp"

namespace emtree {

/// T(z) with T = 1 + z T^d, the counting series of d-ary trees by internal
/// nodes, to the given order. Cached per (d, order); single-threaded use.
inline Series tree_series(int d, long order) {
  static std::map<std::pair<int, long>, Series> cache;
  auto key = std::make_pair(d, order);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  Series seed = Series::constant(Rational(1), order);
  auto F = [&](const Series& x) {
    return Series::constant(Rational(1), x.order()) +
           pow(x, d).shift_up(1);
  };
  return cache.emplace(key, fixed_point_solve_progressive(F, seed))
      .first->second;
}

/// T - 1, the series of nonempty d-ary trees.
inline Series nonempty_tree_series(int d, long order) {
  return tree_series(d, order) - Series::constant(Rational(1), order);
}

/// [z^n] T^k by the closed product formula k/(dn+k) * C(dn+k, n).
inline Int tree_power_coeff(int d, long n, long k) {
  if (n < 0 || k < 0) return Int(0);
  if (k == 0) return Int(n == 0 ? 1 : 0);
  Rational r = Rational(k, d * n + k) * Rational(binomial(Int(d) * n + k, Int(n)));
  return r.to_integer();
}

/// [z^n] (T - 1)^k: k/n * C(dn, n-k) for n >= 1.
inline Int nonempty_power_coeff(int d, long n, long k) {
  if (n < 0 || k < 0) return Int(0);
  if (n == 0) return Int(k == 0 ? 1 : 0);
  if (k == 0) return Int(0);
  return (Rational(k, n) * Rational(binomial(Int(d) * n, Int(n - k)))).to_integer();
}

/// [z^n] T^k by binomial expansion of (1 + (T-1))^k.
inline Int tree_power_coeff_expanded(int d, long n, long k) {
  if (n < 0 || k < 0) return Int(0);
  if (n == 0) return Int(1);
  Rational acc(0);
  for (long l = 1; l <= k; ++l)
    acc += Rational(binomial(k, l)) * Rational(l, n) *
           Rational(binomial(Int(d) * n, Int(n - l)));
  return acc.to_integer();
}

/// [z^n] T^k by direct series arithmetic.
inline Int tree_power_coeff_series(int d, long n, long k) {
  if (n < 0 || k < 0) return Int(0);
  return pow(tree_series(d, n), k).coeff(n).to_integer();
}

/// The power-series root X of the ternary characteristic equation,
/// X = z (1 + X + X^2)^3 / (1 + X^2)^2, with X(0) = 0. Cached per order;
/// single-threaded use.
inline Series char_root_series(long order) {
  static std::map<long, Series> cache;
  if (auto it = cache.find(order); it != cache.end()) return it->second;
  Series seed(order);  // zero
  auto F = [&](const Series& x) {
    long n = x.order();
    Series one = Series::constant(Rational(1), n);
    Series num = pow(one + x + x * x, 3);
    Series den = pow(one + x * x, 2);
    return (num / den).shift_up(1);
  };
  return cache.emplace(order, fixed_point_solve_progressive(F, seed))
      .first->second;
}

/// X via the square-root solution of its quadratic in T - 1:
/// X = (1 - sqrt(1 - 4 (T-1)^2)) / (2 (T-1)).
inline Series char_root_series_sqrt(long order) {
  Series tt = nonempty_tree_series(3, order + 1);
  Series one = Series::constant(Rational(1), order + 1);
  Series root = sqrt_one_plus(one - Rational(4) * tt * tt);
  return (one - root) / (Rational(2) * tt);
}

/// X as the Catalan expansion sum_k Cat_k (T-1)^{2k+1}.
inline Series char_root_series_catalan(long order) {
  Series tt = nonempty_tree_series(3, order);
  Series tt2 = tt * tt;
  Series term = tt;
  Series acc(order);
  for (long k = 0; 2 * k + 1 <= order; ++k) {
    acc += Rational(catalan(k)) * term;
    term *= tt2;
  }
  return acc;
}

/// Real evaluation of T(z) - 1 for ternary trees on the disk of convergence
/// |z| <= 4/27, via the trigonometric (z > 0) and real-cube-root (z < 0)
/// solutions of the cubic z(1+y)^3 = y.
inline double cardano_eval(double z) {
  constexpr double kBound = 4.0 / 27.0;
  if (z > kBound || z < -kBound)
    throw std::domain_error("cardano_eval: |z| exceeds 4/27");
  if (z == 0.0) return 0.0;
  if (z > 0) {
    double ratio = 27.0 * z / (4.0 - 27.0 * z);
    if (!(ratio >= 0.0)) return 0.5;  // z at the right endpoint
    return 2.0 / std::sqrt(3.0 * z) *
               std::sin(std::atan(std::sqrt(ratio)) / 3.0) -
           1.0;
  }
  // One real root for z < 0: depressed cubic u^3 + p u + q with u = 1 + y.
  double p = -1.0 / z;
  double q = 1.0 / z;
  double sq = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
  double u = std::cbrt(-q / 2.0 + sq) + std::cbrt(-q / 2.0 - sq);
  return u - 1.0;
}

}  // namespace emtree
