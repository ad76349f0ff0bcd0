#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace emtree {

using Int = mpz_class;

/// Raised when an exact-arithmetic precondition is violated.
struct ArithmeticError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Arbitrary-precision rational kept in canonical form: lowest terms,
/// positive denominator. All operations are exact.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}
  Rational(const Int& n) : v_(n) {}
  Rational(const Int& num, const Int& den) : v_(num, den) {
    if (den == 0) throw ArithmeticError("Rational: zero denominator");
    v_.canonicalize();
  }
  Rational(long num, long den)
      : Rational(Int(static_cast<signed long>(num)),
                 Int(static_cast<signed long>(den))) {}

  Int numerator() const { return v_.get_num(); }
  Int denominator() const { return v_.get_den(); }

  bool is_zero() const { return v_ == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  /// Exact integer value; errors if the denominator is not 1.
  Int to_integer() const {
    if (!is_integer())
      throw ArithmeticError("Rational: " + str() + " is not an integer");
    return v_.get_num();
  }

  double to_double() const { return v_.get_d(); }

  std::string str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw ArithmeticError("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.v_ == b.v_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return a.v_ != b.v_;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.v_ < b.v_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return a.v_ <= b.v_;
  }
  friend bool operator>(const Rational& a, const Rational& b) {
    return a.v_ > b.v_;
  }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return a.v_ >= b.v_;
  }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

inline Rational pow(const Rational& base, int e) {
  if (e < 0) return Rational(1) / pow(base, -e);
  Rational r(1), b = base;
  for (int k = e; k > 0; k >>= 1) {
    if (k & 1) r *= b;
    if (k > 1) b *= b;
  }
  return r;
}

inline Rational abs(const Rational& a) { return a < Rational(0) ? -a : a; }

}  // namespace emtree
