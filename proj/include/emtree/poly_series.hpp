#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "emtree/mark_polynomial.hpp"
#include "emtree/series.hpp"

namespace emtree {

/// Truncated power series in z whose coefficients are polynomials in a fixed
/// set of mark variables. Order bookkeeping matches Series.
class PolySeries {
 public:
  PolySeries() : order_(0), vars_(), c_(1, MarkPolynomial(0)) {}

  PolySeries(long order, std::vector<std::string> vars)
      : order_(order),
        vars_(std::move(vars)),
        c_(order + 1, MarkPolynomial(static_cast<int>(vars_.size()))) {}

  static PolySeries constant(const MarkPolynomial& v, long order,
                             std::vector<std::string> vars) {
    PolySeries s(order, std::move(vars));
    s.c_[0] = v;
    return s;
  }

  static PolySeries lift(const Series& s, std::vector<std::string> vars) {
    PolySeries r(s.order(), std::move(vars));
    for (long n = 0; n <= s.order(); ++n)
      r.c_[n] = MarkPolynomial::constant(s.coeff(n), r.nvars());
    return r;
  }

  long order() const { return order_; }
  int nvars() const { return static_cast<int>(vars_.size()); }
  const std::vector<std::string>& vars() const { return vars_; }

  const MarkPolynomial& coeff(long n) const {
    static const MarkPolynomial kZero;
    if (n < 0 || n > order_) return kZero;
    return c_[n];
  }

  void set_coeff(long n, const MarkPolynomial& v) {
    if (n < 0 || n > order_)
      throw ArithmeticError("PolySeries: coefficient index out of range");
    c_[n] = v;
  }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(),
                       [](const MarkPolynomial& p) { return p.is_zero(); });
  }

  long valuation() const {
    for (long n = 0; n <= order_; ++n)
      if (!c_[n].is_zero()) return n;
    return order_ + 1;
  }

  PolySeries truncated(long order) const {
    PolySeries r(order, vars_);
    for (long n = 0; n <= std::min(order, order_); ++n) r.c_[n] = c_[n];
    return r;
  }

  PolySeries operator-() const {
    PolySeries r = *this;
    for (auto& p : r.c_) p = -p;
    return r;
  }

  friend PolySeries operator+(const PolySeries& a, const PolySeries& b) {
    a.require_same(b);
    PolySeries r(std::min(a.order_, b.order_), a.vars_);
    for (long n = 0; n <= r.order_; ++n) r.c_[n] = a.c_[n] + b.c_[n];
    return r;
  }

  friend PolySeries operator-(const PolySeries& a, const PolySeries& b) {
    a.require_same(b);
    PolySeries r(std::min(a.order_, b.order_), a.vars_);
    for (long n = 0; n <= r.order_; ++n) r.c_[n] = a.c_[n] - b.c_[n];
    return r;
  }

  friend PolySeries operator*(const PolySeries& a, const PolySeries& b) {
    a.require_same(b);
    PolySeries r(std::min(a.order_, b.order_), a.vars_);
    for (long i = 0; i <= r.order_; ++i) {
      if (a.c_[i].is_zero()) continue;
      for (long j = 0; i + j <= r.order_; ++j) {
        if (b.c_[j].is_zero()) continue;
        r.c_[i + j] += a.c_[i] * b.c_[j];
      }
    }
    return r;
  }

  PolySeries& operator+=(const PolySeries& o) { return *this = *this + o; }
  PolySeries& operator-=(const PolySeries& o) { return *this = *this - o; }
  PolySeries& operator*=(const PolySeries& o) { return *this = *this * o; }

  /// Multiply every coefficient by a fixed polynomial in the same variables.
  friend PolySeries operator*(const MarkPolynomial& s, const PolySeries& a) {
    PolySeries r = a;
    for (auto& p : r.c_) p = s * p;
    return r;
  }

  /// Reciprocal; the constant coefficient must be a nonzero rational constant
  /// (every series inverted here has constant coefficient 1).
  PolySeries recip() const {
    if (!c_[0].is_constant() || c_[0].constant_value().is_zero())
      throw ArithmeticError(
          "PolySeries: reciprocal needs a nonzero constant leading coefficient");
    PolySeries r(order_, vars_);
    Rational inv0 = Rational(1) / c_[0].constant_value();
    r.c_[0] = MarkPolynomial::constant(inv0, nvars());
    for (long n = 1; n <= order_; ++n) {
      MarkPolynomial acc(nvars());
      for (long k = 1; k <= n; ++k) acc += c_[k] * r.c_[n - k];
      r.c_[n] = -inv0 * acc;
    }
    return r;
  }

  PolySeries shift_down(long k) const {
    if (k < 0) return shift_up(-k);
    if (valuation() < k)
      throw ArithmeticError("PolySeries: shift_down would drop nonzero terms");
    if (order_ - k < 0)
      throw ArithmeticError("PolySeries: shift_down below order zero");
    PolySeries r(order_ - k, vars_);
    for (long n = 0; n <= r.order_; ++n) r.c_[n] = c_[n + k];
    return r;
  }

  PolySeries shift_up(long k) const {
    if (k < 0) return shift_down(-k);
    PolySeries r(order_, vars_);
    for (long n = order_; n >= k; --n) r.c_[n] = c_[n - k];
    return r;
  }

  friend PolySeries operator/(const PolySeries& a, const PolySeries& b) {
    long v = b.valuation();
    if (v > b.order_)
      throw ArithmeticError("PolySeries: division by zero series");
    if (a.valuation() < v)
      throw ArithmeticError("PolySeries: quotient is not a power series");
    long n = std::min(a.order_, b.order_);
    PolySeries at = a.truncated(n).shift_down(v);
    PolySeries bt = b.truncated(n).shift_down(v);
    return at * bt.recip();
  }

  /// Apply x_i := a + b * x_i to every coefficient.
  PolySeries substitute_affine(int i, const Rational& a,
                               const Rational& b) const {
    PolySeries r = *this;
    for (auto& p : r.c_) p = p.substitute_affine(i, a, b);
    return r;
  }

  PolySeries evaluate_var(int i, const Rational& value) const {
    PolySeries r = *this;
    for (auto& p : r.c_) p = p.evaluate_var(i, value);
    return r;
  }

  /// Set every mark variable to 1, collapsing to a plain series.
  Series at_all_ones() const {
    Series r(order_);
    for (long n = 0; n <= order_; ++n) r.set_coeff(n, c_[n].at_all_ones());
    return r;
  }

  /// Collapse to a plain series; every coefficient must be constant.
  Series to_series() const {
    Series r(order_);
    for (long n = 0; n <= order_; ++n) {
      if (!c_[n].is_constant())
        throw ArithmeticError("PolySeries: coefficient is not variable-free");
      r.set_coeff(n, c_[n].constant_value());
    }
    return r;
  }

  friend bool operator==(const PolySeries& a, const PolySeries& b) {
    return a.order_ == b.order_ && a.c_ == b.c_;
  }
  friend bool operator!=(const PolySeries& a, const PolySeries& b) {
    return !(a == b);
  }

  bool agrees_with(const PolySeries& o) const {
    long n = std::min(order_, o.order_);
    for (long i = 0; i <= n; ++i)
      if (c_[i] != o.c_[i]) return false;
    return true;
  }

  std::string str() const {
    std::string out;
    for (long n = 0; n <= order_; ++n) {
      if (n) out += "; ";
      out += "[z^" + std::to_string(n) + "] " + c_[n].str(vars_);
    }
    return out;
  }

 private:
  void require_same(const PolySeries& o) const {
    if (nvars() != o.nvars())
      throw ArithmeticError("PolySeries: mixed variable counts");
  }

  long order_;
  std::vector<std::string> vars_;
  std::vector<MarkPolynomial> c_;
};

inline PolySeries pow(const PolySeries& base, long e) {
  PolySeries r = PolySeries::constant(
      MarkPolynomial::constant(Rational(1), base.nvars()), base.order(),
      base.vars());
  if (e < 0) return pow(base.recip(), -e);
  PolySeries b = base;
  for (long k = e; k > 0; k >>= 1) {
    if (k & 1) r *= b;
    if (k > 1) b *= b;
  }
  return r;
}

}  // namespace emtree
