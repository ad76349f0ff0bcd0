#pragma once

#include <vector>

#include "emtree/combinatorics.hpp"
#include "emtree/poly_series.hpp"
#include "emtree/series.hpp"
#include "emtree/ternary_gf.hpp"

namespace emtree {

/// Counting series of naturally embedded ternary trees whose internal labels
/// all stay at most j (root label 0). Equivalently, by reflection, trees
/// rooted at label j with all labels nonnegative, which is the form the
/// recurrence below uses. j = -1 admits only the empty tree.

/// System route: V_k = 1 + z V_{k-1} V_k V_{k+1} with V_{-1} = 1 and V_k = T
/// for k >= K; [z^n]V_k equals [z^n]T once k >= n - 1, so K = max(j, N) is a
/// faithful cutoff. Returns V_j.
inline Series max_label_series_system(long j, long order) {
  if (j < -1)
    throw ArithmeticError("max_label_series_system: j must be >= -1");
  if (j == -1) return Series::constant(Rational(1), order);
  const long K = std::max(j, order);
  Series t = tree_series(3, order);
  // v[k+1] holds V_k for k = -1 .. K.
  std::vector<Series> v(K + 2, Series(order));
  v[0] = Series::constant(Rational(1), order);
  for (long k = 0; k <= K; ++k) v[k + 1] = (k == K) ? t : Series(order);
  for (long k = 0; k <= K; ++k) v[k + 1].set_coeff(0, Rational(1));
  for (long n = 1; n <= order; ++n)
    for (long k = K - 1; k >= 0; --k) {
      Rational acc(0);
      for (long a = 0; a < n; ++a) {
        Rational inner(0);
        for (long b = 0; a + b < n; ++b)
          inner += v[k].coeff(a) * v[k + 1].coeff(b) *
                   v[k + 2].coeff(n - 1 - a - b);
        acc += inner;
      }
      v[k + 1].set_coeff(n, acc);
    }
  return v[j + 1];
}

/// Closed route through the characteristic root X:
/// V_j = T (1 - X^{j+2})(1 - X^{j+5}) / ((1 - X^{j+3})(1 - X^{j+4})).
inline Series max_label_series_closed(long j, long order) {
  if (j < -1)
    throw ArithmeticError("max_label_series_closed: j must be >= -1");
  Series x = char_root_series(order);
  Series one = Series::constant(Rational(1), order);
  Series t = (one + x + x * x) / (one + x * x);
  Series num = (one - pow(x, j + 2)) * (one - pow(x, j + 5));
  Series den = (one - pow(x, j + 3)) * (one - pow(x, j + 4));
  return t * num / den;
}

/// [z^n] V_0 = 2 C(3n, n) / ((n+1)(2n+1)) for n >= 1.
inline Int max_label0_coeff(long n) {
  if (n < 0) return Int(0);
  if (n == 0) return Int(1);
  return (Rational(2) * Rational(binomial(3 * n, n)) /
          Rational(Int(Int(n + 1) * Int(2 * n + 1))))
      .to_integer();
}

/// [z^n] V_1 = 2 C(3n,n)/(n+1)
///   + sum_{k=0}^{n} (-1)^{k+1} F_{k+1} C(3n, n-k)
///       (n(11k+5) - 2k(k+1)) / (n(2n+k+1)),  n >= 1.
inline Int max_label1_coeff(long n) {
  if (n < 0) return Int(0);
  if (n == 0) return Int(1);
  Rational acc = Rational(2) * Rational(binomial(3 * n, n)) / Rational(n + 1);
  for (long k = 0; k <= n; ++k) {
    Rational term = Rational(fibonacci(k + 1)) *
                    Rational(binomial(3 * n, n - k)) *
                    Rational(Int(Int(n) * (11 * k + 5) - Int(2) * k * (k + 1))) /
                    Rational(Int(Int(n) * (2 * n + k + 1)));
    acc += (k % 2 == 0) ? -term : term;
  }
  return acc.to_integer();
}

/// One-parameter family check: with a_k = 1 - lambda X^k the family
/// F_j = T a_{j+2} a_{j+5} / (a_{j+3} a_{j+4}) satisfies the defining
/// recurrence F_j = 1 + z F_{j-1} F_j F_{j+1} for every integer j. Clearing
/// all denominators (and a factor X^m per a to stay Laurent-free for j < -1,
/// with w_k = X^m - lambda X^{k+1+m}, m = max(0, -(j+1))) gives
///   (1+X+X^2) w_{j+1}^2 w_{j+2} w_{j+3} w_{j+4}^2
///     = (1+X^2) w_{j+1} w_{j+2}^2 w_{j+3}^2 w_{j+4}
///     + X w_j w_{j+1} w_{j+2} w_{j+3} w_{j+4} w_{j+5},
/// verified here as an exact identity in lambda and z.
inline bool check_solution_family(long j, long order) {
  const long m = std::max<long>(0, -(j + 1));
  Series x = char_root_series(order);
  std::vector<std::string> vars{"lambda"};
  MarkPolynomial lam = MarkPolynomial::variable(0, 1);
  auto lift = [&](const Series& s) { return PolySeries::lift(s, vars); };
  PolySeries xs = lift(x);
  auto w = [&](long k) {
    return lift(pow(x, m)) - lam * lift(pow(x, k + 1 + m));
  };
  PolySeries w0 = w(j), w1 = w(j + 1), w2 = w(j + 2), w3 = w(j + 3),
             w4 = w(j + 4), w5 = w(j + 5);
  Series one = Series::constant(Rational(1), order);
  PolySeries lhs = lift(one + x + x * x) * w1 * w1 * w2 * w3 * w4 * w4;
  PolySeries rhs = lift(one + x * x) * w1 * w2 * w2 * w3 * w3 * w4 +
                   xs * w0 * w1 * w2 * w3 * w4 * w5;
  return lhs == rhs;
}

}  // namespace emtree
