#pragma once

#include <cstdlib>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "emtree/fixed_point.hpp"
#include "emtree/poly_series.hpp"
#include "emtree/ternary_gf.hpp"

namespace emtree {

/// Series of naturally embedded ternary trees rooted at label j where each
/// internal node at label l with |l| <= m carries the mark u_{|l|}. By the
/// left-right reflection these satisfy S_j = S_{-j}, so everything below
/// works with |j|.

inline std::vector<std::string> mark_vars(long m) {
  std::vector<std::string> v;
  for (long i = 0; i <= m; ++i) v.push_back("u" + std::to_string(i));
  return v;
}

namespace detail {

inline PolySeries ps_one(long order, const std::vector<std::string>& vars) {
  return PolySeries::constant(
      MarkPolynomial::constant(Rational(1), static_cast<int>(vars.size())),
      order, vars);
}

/// (1 + X)^2 (1 - X)^3, the common denominator polynomial of the mark
/// fixed-point equations.
inline Series mark_denominator(const Series& x) {
  Series one = Series::constant(Rational(1), x.order());
  return pow(one + x, 2) * pow(one - x, 3);
}

}  // namespace detail

/// Mark generator for the single-mark family (u_0 marks label 0): the
/// series mu with mu(0) = u_0 - 1 solving
///   mu = (u_0 - 1)(1 + mu X)(1 + mu X^2)^2 (1 + mu X^5)
///        / (D (1 - mu^2 X^5)),   D = (1+X)^2 (1-X)^3.
/// Every mu on the right rides with a positive power of X, so the map is a
/// z-adic contraction. Cached per order; single-threaded use.
inline PolySeries single_mark_mu(long order) {
  static std::map<long, PolySeries> cache;
  if (auto it = cache.find(order); it != cache.end()) return it->second;
  auto vars = mark_vars(0);
  Series x = char_root_series(order);
  PolySeries xs = PolySeries::lift(x, vars);
  PolySeries x2 = PolySeries::lift(pow(x, 2), vars);
  PolySeries x5 = PolySeries::lift(pow(x, 5), vars);
  PolySeries dd = PolySeries::lift(detail::mark_denominator(x), vars);
  MarkPolynomial t = MarkPolynomial::variable(0, 1) -
                     MarkPolynomial::constant(Rational(1), 1);
  PolySeries one = detail::ps_one(order, vars);
  auto F = [&](const PolySeries& mu) {
    PolySeries num =
        t * ((one + mu * xs) * pow(one + mu * x2, 2) * (one + mu * x5));
    PolySeries den = dd * (one - mu * mu * x5);
    return num / den;
  };
  auto sol =
      fixed_point_solve_progressive(F, PolySeries::constant(t, order, vars));
  return cache.emplace(order, std::move(sol)).first->second;
}

/// Closed single-mark series S_j = T (1 + mu X^{j+1})(1 + mu X^{j+4})
/// / ((1 + mu X^{j+2})(1 + mu X^{j+3})), folded to |j|.
inline PolySeries single_mark_closed(long j, long order) {
  if (j < 0) j = -j;
  auto vars = mark_vars(0);
  Series x = char_root_series(order);
  PolySeries mu = single_mark_mu(order);
  PolySeries t = PolySeries::lift(tree_series(3, order), vars);
  PolySeries one = detail::ps_one(order, vars);
  auto xp = [&](long e) { return PolySeries::lift(pow(x, e), vars); };
  PolySeries num = (one + mu * xp(j + 1)) * (one + mu * xp(j + 4));
  PolySeries den = (one + mu * xp(j + 2)) * (one + mu * xp(j + 3));
  return t * num / den;
}

/// Mark generator for the pair-mark family (u_0 marks label 0, u_1 marks
/// labels +-1): nu with nu(0) = u_1 - 1 solving
///   nu D (1 + nu X^4)(1 - nu^2 X^3)
///     = (u_0 - 1) X (1 + nu)(1 + nu X)^2 (1 + nu X^4)^2
///     + (u_1 - 1)(1 + X^2)(1 + nu X)(1 + nu X^2)^3 (1 + nu X^3).
/// The variable nu is X times the natural Laurent generator, which makes
/// the right-hand side a z-adic contraction. Cached per order;
/// single-threaded use.
inline PolySeries pair_mark_nu(long order) {
  static std::map<long, PolySeries> cache;
  if (auto it = cache.find(order); it != cache.end()) return it->second;
  auto vars = mark_vars(1);
  Series x = char_root_series(order);
  Series one_s = Series::constant(Rational(1), order);
  auto lift = [&](const Series& s) { return PolySeries::lift(s, vars); };
  PolySeries xs = lift(x);
  PolySeries x2 = lift(pow(x, 2));
  PolySeries x3 = lift(pow(x, 3));
  PolySeries x4 = lift(pow(x, 4));
  PolySeries one_x2 = lift(one_s + x * x);
  PolySeries dd = lift(detail::mark_denominator(x));
  MarkPolynomial t0 = MarkPolynomial::variable(0, 2) -
                      MarkPolynomial::constant(Rational(1), 2);
  MarkPolynomial t1 = MarkPolynomial::variable(1, 2) -
                      MarkPolynomial::constant(Rational(1), 2);
  PolySeries one = detail::ps_one(order, vars);
  auto F = [&](const PolySeries& nu) {
    PolySeries a =
        t0 * (xs * (one + nu) * pow(one + nu * xs, 2) * pow(one + nu * x4, 2));
    PolySeries b = t1 * (one_x2 * (one + nu * xs) * pow(one + nu * x2, 3) *
                         (one + nu * x3));
    PolySeries den = dd * (one + nu * x4) * (one - nu * nu * x3);
    return (a + b) / den;
  };
  auto sol = fixed_point_solve_progressive(
      F, PolySeries::constant(t1, order, vars));
  return cache.emplace(order, std::move(sol)).first->second;
}

/// Closed pair-mark series: for j >= 1,
///   S_j = T (1 + nu X^j)(1 + nu X^{j+3}) / ((1 + nu X^{j+1})(1 + nu X^{j+2}));
/// S_0 follows from its own node equation S_0 = 1 / (1 - u_0 z S_1^2);
/// negative j folds to |j|.
inline PolySeries pair_mark_closed(long j, long order) {
  if (j < 0) j = -j;
  auto vars = mark_vars(1);
  Series x = char_root_series(order);
  PolySeries one = detail::ps_one(order, vars);
  auto xp = [&](long e) { return PolySeries::lift(pow(x, e), vars); };
  auto closed_pos = [&](long jj) {
    PolySeries nu = pair_mark_nu(order);
    PolySeries t = PolySeries::lift(tree_series(3, order), vars);
    PolySeries num = (one + nu * xp(jj)) * (one + nu * xp(jj + 3));
    PolySeries den = (one + nu * xp(jj + 1)) * (one + nu * xp(jj + 2));
    return t * num / den;
  };
  if (j >= 1) return closed_pos(j);
  PolySeries s1 = closed_pos(1);
  MarkPolynomial u0 = MarkPolynomial::variable(0, 2);
  return (one - u0 * (s1 * s1).shift_up(1)).recip();
}

/// Fully marked system of node equations, solved order by order:
///   S_k = 1 + u_k z S_{k-1} S_k S_{k+1}  (S_{-1} = S_1),
/// with marks u_k for k <= m, no mark beyond, and the unmarked boundary
/// S_k = T for k >= K. Since a tree of size n rooted at label k only
/// reaches labels >= k - n, the cutoff is exact once K > order + m.
/// Returns S_0 .. S_K.
inline std::vector<PolySeries> multi_mark_system(long m, long K, long order) {
  if (m < 0 || m + 1 > MarkPolynomial::kMaxVars)
    throw ArithmeticError("multi_mark_system: mark count out of range");
  if (K <= m)
    throw ArithmeticError("multi_mark_system: cutoff must exceed mark range");
  auto vars = mark_vars(m);
  const int nv = static_cast<int>(vars.size());
  Series t = tree_series(3, order);
  const MarkPolynomial one_p = MarkPolynomial::constant(Rational(1), nv);
  // coeff[k][n] = [z^n] S_k; pair[k][n] = [z^n] (S_k S_{k+1}).
  std::vector<std::vector<MarkPolynomial>> coeff(
      K + 1, std::vector<MarkPolynomial>(order + 1, MarkPolynomial(nv)));
  std::vector<std::vector<MarkPolynomial>> pair(
      K, std::vector<MarkPolynomial>(order + 1, MarkPolynomial(nv)));
  for (long n = 0; n <= order; ++n)
    coeff[K][n] = MarkPolynomial::constant(t.coeff(n), nv);
  for (long k = 0; k < K; ++k) coeff[k][0] = one_p;
  std::vector<MarkPolynomial> mark(K);
  for (long k = 0; k < K; ++k)
    mark[k] = (k <= m) ? MarkPolynomial::variable(static_cast<int>(k), nv)
                       : one_p;
  for (long n = 1; n <= order; ++n) {
    for (long k = 0; k < K; ++k) {
      // Settle [z^{n-1}] of the running pair product S_k S_{k+1}.
      MarkPolynomial p(nv);
      for (long a = 0; a <= n - 1; ++a)
        p += coeff[k][a] * coeff[k + 1][n - 1 - a];
      pair[k][n - 1] = p;
      // [z^n] S_k = u_k [z^{n-1}] (S_{k-1} S_k S_{k+1}).
      const auto& left = coeff[k == 0 ? 1 : k - 1];
      MarkPolynomial triple(nv);
      for (long a = 0; a <= n - 1; ++a) triple += left[a] * pair[k][n - 1 - a];
      coeff[k][n] = mark[k] * triple;
    }
  }
  std::vector<PolySeries> out;
  for (long k = 0; k <= K; ++k) {
    PolySeries s(order, vars);
    for (long n = 0; n <= order; ++n) s.set_coeff(n, coeff[k][n]);
    out.push_back(std::move(s));
  }
  return out;
}

/// Cutoff index that keeps S_{|j|} exact to the given order with m marks.
inline long mark_system_cutoff(long j, long m, long order) {
  return std::max(std::abs(j), order + m) + 1;
}

/// System route for one marked series, folded to |j|.
inline PolySeries label_mark_series_system(long j, long m, long order) {
  long jj = std::abs(j);
  long K = mark_system_cutoff(j, m, order);
  return multi_mark_system(m, K, order)[jj];
}

/// Continuant sequence k_{-1} = 1, k_0 = 1 - a_0,
/// k_i = k_{i-1} - a_i k_{i-2}; returns {k_{-1}, k_0, ..., k_n}.
template <typename R>
std::vector<R> continuant_recurrence(const std::vector<R>& a, const R& one) {
  std::vector<R> k{one};
  if (a.empty()) return k;
  k.push_back(one - a[0]);
  for (size_t i = 1; i < a.size(); ++i)
    k.push_back(k[i] - a[i] * k[i - 1]);
  return k;
}

/// The same continuant as an explicit signed sum over the subsets of
/// {0..n} containing no two consecutive indices.
template <typename R>
R continuant_explicit(const std::vector<R>& a, const R& one) {
  size_t n = a.size();
  if (n > 20)
    throw ArithmeticError("continuant_explicit: subset enumeration too large");
  R acc = one;  // empty subset
  for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
    if (mask & (mask << 1)) continue;
    R term = one;
    int bits = 0;
    for (size_t i = 0; i < n; ++i)
      if (mask & (1UL << i)) {
        term = term * a[i];
        ++bits;
      }
    if (bits % 2)
      acc = acc - term;
    else
      acc = acc + term;
  }
  return acc;
}

/// Value of the branched continued fraction
///   <a_n, ..., a_0> = 1 / (1 - a_n / (1 - a_{n-1} / ( ... / (1 - a_0))))
/// through the continuant ratio k_{n-1} / k_n.
template <typename R>
R continued_fraction_value(const std::vector<R>& a, const R& one) {
  auto k = continuant_recurrence(a, one);
  return k[k.size() - 2] / k[k.size() - 1];
}

/// The marked series S_m equals the continued fraction over
/// a_0 = u_0 z S_1^2, a_i = u_i z S_{i+1} (i = 1..m); checked here to the
/// given order, along with recurrence-vs-explicit continuant agreement.
inline bool check_cfrac_identity(long m, long order) {
  long K = mark_system_cutoff(m + 1, m, order);
  auto S = multi_mark_system(m, K, order);
  auto vars = mark_vars(m);
  const int nv = static_cast<int>(vars.size());
  PolySeries one = detail::ps_one(order, vars);
  std::vector<PolySeries> a;
  a.push_back(MarkPolynomial::variable(0, nv) *
              (S[1] * S[1]).shift_up(1));
  for (long i = 1; i <= m; ++i)
    a.push_back(MarkPolynomial::variable(static_cast<int>(i), nv) *
                S[i + 1].shift_up(1));
  auto k = continuant_recurrence(a, one);
  for (size_t i = 0; i < a.size(); ++i) {
    std::vector<PolySeries> prefix(a.begin(), a.begin() + i + 1);
    if (continuant_explicit(prefix, one) != k[i + 1]) return false;
  }
  return continued_fraction_value(a, one) == S[m];
}

}  // namespace emtree
