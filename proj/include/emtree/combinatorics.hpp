#pragma once

#include <vector>

#include "emtree/rational.hpp"

namespace emtree {

/// C(n, k) for integer n (possibly negative via the falling-factorial
/// convention is not needed here; n < 0 or k < 0 yields 0).
inline Int binomial(const Int& n, const Int& k) {
  if (k < 0 || n < 0 || k > n) return Int(0);
  Int r(1);
  Int kk = k;
  if (n - k < kk) kk = n - k;
  for (Int i(0); i < kk; ++i) {
    r *= (n - i);
    r /= (i + 1);  // exact: product of j consecutive integers divides j!
  }
  return r;
}

inline Int binomial(long n, long k) { return binomial(Int(n), Int(k)); }

/// Multinomial coefficient (sum m_i)! / prod m_i!. Any negative part gives 0.
inline Int multinomial(const std::vector<long>& parts) {
  Int total(0);
  for (long p : parts) {
    if (p < 0) return Int(0);
    total += p;
  }
  Int r(1);
  Int upper = total;
  for (long p : parts) {
    r *= binomial(upper, Int(p));
    upper -= p;
  }
  return r;
}

inline Int factorial(long n) {
  Int r(1);
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

/// Fibonacci with F(1) = F(2) = 1.
inline Int fibonacci(long n) {
  if (n <= 0) return Int(0);
  Int a(0), b(1);
  for (long i = 1; i < n; ++i) {
    Int c = a + b;
    a = b;
    b = c;
  }
  return b;
}

/// Catalan number C(2n, n) / (n + 1).
inline Int catalan(long n) {
  if (n < 0) return Int(0);
  return binomial(2 * n, n) / Int(n + 1);
}

}  // namespace emtree
