#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "emtree/rational.hpp"

namespace emtree {

/// Truncated formal power series over Rational. A Series of order N holds
/// exact coefficients of z^0 .. z^N. All operations track the truncation
/// order honestly: a result is only claimed to the order it is exact.
class Series {
 public:
  Series() : order_(0), c_(1) {}
  explicit Series(long order) : order_(order), c_(order + 1) {}
  Series(long order, std::vector<Rational> coeffs)
      : order_(order), c_(std::move(coeffs)) {
    c_.resize(order_ + 1);
  }

  static Series constant(const Rational& v, long order) {
    Series s(order);
    s.c_[0] = v;
    return s;
  }

  /// The monomial z (zero if order < 1).
  static Series z(long order) {
    Series s(order);
    if (order >= 1) s.c_[1] = Rational(1);
    return s;
  }

  long order() const { return order_; }

  const Rational& coeff(long n) const {
    static const Rational kZero(0);
    if (n < 0 || n > order_) return kZero;
    return c_[n];
  }

  void set_coeff(long n, const Rational& v) {
    if (n < 0 || n > order_)
      throw ArithmeticError("Series: coefficient index out of range");
    c_[n] = v;
  }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(),
                       [](const Rational& r) { return r.is_zero(); });
  }

  /// Index of the first nonzero coefficient; order() + 1 if none up to order.
  long valuation() const {
    for (long n = 0; n <= order_; ++n)
      if (!c_[n].is_zero()) return n;
    return order_ + 1;
  }

  /// Truncate (or zero-extend) to a new order. Extending is only meaningful
  /// when the dropped tail is genuinely zero, e.g. for polynomials.
  Series truncated(long order) const {
    std::vector<Rational> c(c_.begin(),
                            c_.begin() + std::min(order_, order) + 1);
    return Series(order, std::move(c));
  }

  Series operator-() const {
    Series r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  friend Series operator+(const Series& a, const Series& b) {
    long n = std::min(a.order_, b.order_);
    Series r(n);
    for (long i = 0; i <= n; ++i) r.c_[i] = a.c_[i] + b.c_[i];
    return r;
  }

  friend Series operator-(const Series& a, const Series& b) {
    long n = std::min(a.order_, b.order_);
    Series r(n);
    for (long i = 0; i <= n; ++i) r.c_[i] = a.c_[i] - b.c_[i];
    return r;
  }

  friend Series operator*(const Series& a, const Series& b) {
    long n = std::min(a.order_, b.order_);
    Series r(n);
    for (long i = 0; i <= n; ++i) {
      if (a.c_[i].is_zero()) continue;
      for (long j = 0; i + j <= n; ++j) {
        if (b.c_[j].is_zero()) continue;
        r.c_[i + j] += a.c_[i] * b.c_[j];
      }
    }
    return r;
  }

  Series& operator+=(const Series& o) { return *this = *this + o; }
  Series& operator-=(const Series& o) { return *this = *this - o; }
  Series& operator*=(const Series& o) { return *this = *this * o; }

  friend Series operator*(const Rational& s, const Series& a) {
    Series r = a;
    for (auto& x : r.c_) x = s * x;
    return r;
  }

  /// Multiplicative inverse; requires a nonzero constant term.
  Series recip() const {
    if (c_[0].is_zero())
      throw ArithmeticError("Series: reciprocal of series with zero constant term");
    Series r(order_);
    Rational inv0 = Rational(1) / c_[0];
    r.c_[0] = inv0;
    for (long n = 1; n <= order_; ++n) {
      Rational acc(0);
      for (long k = 1; k <= n; ++k) acc += c_[k] * r.c_[n - k];
      r.c_[n] = -inv0 * acc;
    }
    return r;
  }

  /// Divide by z^k; the k low-order coefficients must vanish. The result is
  /// exact only to order() - k, and the order shrinks accordingly.
  Series shift_down(long k) const {
    if (k < 0) return shift_up(-k);
    if (valuation() < k)
      throw ArithmeticError("Series: shift_down would drop nonzero terms");
    if (order_ - k < 0)
      throw ArithmeticError("Series: shift_down below order zero");
    Series r(order_ - k);
    for (long n = 0; n <= r.order_; ++n) r.c_[n] = c_[n + k];
    return r;
  }

  /// Multiply by z^k, truncating at the same order.
  Series shift_up(long k) const {
    if (k < 0) return shift_down(-k);
    Series r(order_);
    for (long n = order_; n >= k; --n) r.c_[n] = c_[n - k];
    return r;
  }

  /// Exact quotient a / b. The divisor's valuation v must not exceed the
  /// dividend's; the result order is min(order) - v.
  friend Series operator/(const Series& a, const Series& b) {
    long v = b.valuation();
    if (v > b.order_)
      throw ArithmeticError("Series: division by zero series");
    if (a.valuation() < v)
      throw ArithmeticError("Series: quotient is not a power series");
    long n = std::min(a.order_, b.order_);
    Series at = a.truncated(n).shift_down(v);
    Series bt = b.truncated(n).shift_down(v);
    return at * bt.recip();
  }

  std::string str() const {
    std::string out;
    for (long n = 0; n <= order_; ++n) {
      if (n) out += ", ";
      out += c_[n].str();
    }
    return out;
  }

  /// Partial-sum evaluation at a real point (Horner).
  double eval_double(double z) const {
    double acc = 0.0;
    for (long n = order_; n >= 0; --n) acc = acc * z + c_[n].to_double();
    return acc;
  }

  friend bool operator==(const Series& a, const Series& b) {
    return a.order_ == b.order_ && a.c_ == b.c_;
  }
  friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

  /// Equality of all coefficients up to the smaller order.
  bool agrees_with(const Series& o) const {
    long n = std::min(order_, o.order_);
    for (long i = 0; i <= n; ++i)
      if (c_[i] != o.c_[i]) return false;
    return true;
  }

 private:
  long order_;
  std::vector<Rational> c_;
};

inline Series pow(const Series& base, long e) {
  if (e < 0) return pow(base.recip(), -e);
  Series r = Series::constant(Rational(1), base.order());
  Series b = base;
  for (long k = e; k > 0; k >>= 1) {
    if (k & 1) r *= b;
    if (k > 1) b *= b;
  }
  return r;
}

/// Square root with constant term 1 (the only case needed here).
inline Series sqrt_one_plus(const Series& a) {
  if (a.coeff(0) != Rational(1))
    throw ArithmeticError("Series: sqrt requires constant term 1");
  long N = a.order();
  Series r(N);
  r.set_coeff(0, Rational(1));
  for (long n = 1; n <= N; ++n) {
    Rational acc = a.coeff(n);
    for (long k = 1; k < n; ++k) acc -= r.coeff(k) * r.coeff(n - k);
    r.set_coeff(n, acc / Rational(2));
  }
  return r;
}

}  // namespace emtree
