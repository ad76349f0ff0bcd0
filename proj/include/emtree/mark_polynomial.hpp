#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "emtree/combinatorics.hpp"
#include "emtree/rational.hpp"

namespace emtree {

/// Sparse polynomial in up to 8 mark variables over Rational. Exponent
/// vectors are packed 8 bits per variable into a uint64 key, so individual
/// exponents must stay below 256 (far above anything arising here).
class MarkPolynomial {
 public:
  static constexpr int kMaxVars = 8;
  static constexpr long kMaxExp = 255;

  MarkPolynomial() : nvars_(0) {}
  explicit MarkPolynomial(int nvars) : nvars_(check_nvars(nvars)) {}

  static MarkPolynomial constant(const Rational& v, int nvars) {
    MarkPolynomial p(nvars);
    if (!v.is_zero()) p.terms_[0] = v;
    return p;
  }

  static MarkPolynomial variable(int i, int nvars) {
    MarkPolynomial p(nvars);
    p.terms_[key_of_single(i, nvars)] = Rational(1);
    return p;
  }

  static MarkPolynomial monomial(const std::vector<long>& exps,
                                 const Rational& coeff, int nvars) {
    MarkPolynomial p(nvars);
    if (!coeff.is_zero()) p.terms_[p.pack(exps)] = coeff;
    return p;
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
  }

  Rational constant_value() const {
    auto it = terms_.find(0);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  Rational coeff(const std::vector<long>& exps) const {
    auto it = terms_.find(pack(exps));
    return it == terms_.end() ? Rational(0) : it->second;
  }

  long total_degree() const {
    long d = 0;
    for (const auto& [k, v] : terms_) {
      long t = 0;
      for (int i = 0; i < nvars_; ++i) t += exp_of(k, i);
      d = std::max(d, t);
    }
    return d;
  }

  long degree_in(int i) const {
    long d = 0;
    for (const auto& [k, v] : terms_) d = std::max(d, exp_of(k, i));
    return d;
  }

  MarkPolynomial operator-() const {
    MarkPolynomial r = *this;
    for (auto& [k, v] : r.terms_) v = -v;
    return r;
  }

  MarkPolynomial& operator+=(const MarkPolynomial& o) {
    require_same(o);
    for (const auto& [k, v] : o.terms_) add_term(k, v);
    return *this;
  }
  MarkPolynomial& operator-=(const MarkPolynomial& o) {
    require_same(o);
    for (const auto& [k, v] : o.terms_) add_term(k, -v);
    return *this;
  }

  friend MarkPolynomial operator+(MarkPolynomial a, const MarkPolynomial& b) {
    return a += b;
  }
  friend MarkPolynomial operator-(MarkPolynomial a, const MarkPolynomial& b) {
    return a -= b;
  }

  friend MarkPolynomial operator*(const MarkPolynomial& a,
                                  const MarkPolynomial& b) {
    a.require_same(b);
    MarkPolynomial r(a.nvars_);
    for (const auto& [ka, va] : a.terms_)
      for (const auto& [kb, vb] : b.terms_) r.add_term(add_keys(ka, kb, a.nvars_), va * vb);
    return r;
  }

  MarkPolynomial& operator*=(const MarkPolynomial& o) {
    return *this = *this * o;
  }

  friend MarkPolynomial operator*(const Rational& s, const MarkPolynomial& a) {
    if (s.is_zero()) return MarkPolynomial(a.nvars_);
    MarkPolynomial r = a;
    for (auto& [k, v] : r.terms_) v = s * v;
    return r;
  }

  friend bool operator==(const MarkPolynomial& a, const MarkPolynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MarkPolynomial& a, const MarkPolynomial& b) {
    return !(a == b);
  }

  /// Replace variable i by the affine image a + b * x_i (binomial expansion).
  MarkPolynomial substitute_affine(int i, const Rational& a,
                                   const Rational& b) const {
    MarkPolynomial r(nvars_);
    for (const auto& [k, v] : terms_) {
      long e = exp_of(k, i);
      uint64_t base = clear_var(k, i);
      // (a + b x)^e expanded term by term.
      Rational apow(1);
      for (long j = e; j >= 0; --j) {
        // coefficient of x^j: C(e, j) b^j a^(e-j); iterate j descending so
        // powers of a build up incrementally.
        Rational c = Rational(binomial(e, j)) * pow(b, static_cast<int>(j)) * apow;
        r.add_term(set_var(base, i, j, nvars_), v * c);
        apow *= a;
      }
    }
    return r;
  }

  /// Substitute a rational value for variable i.
  MarkPolynomial evaluate_var(int i, const Rational& value) const {
    MarkPolynomial r(nvars_);
    for (const auto& [k, v] : terms_) {
      long e = exp_of(k, i);
      r.add_term(clear_var(k, i), v * pow(value, static_cast<int>(e)));
    }
    return r;
  }

  /// Sum of all coefficients (every variable set to 1).
  Rational at_all_ones() const {
    Rational s(0);
    for (const auto& [k, v] : terms_) s += v;
    return s;
  }

  /// Render with the given variable names, terms in key order.
  std::string str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, v] : terms_) {
      if (!first) out += " + ";
      first = false;
      std::string mono;
      for (int i = 0; i < nvars_; ++i) {
        long e = exp_of(k, i);
        if (e == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += names[i];
        if (e > 1) mono += "^" + std::to_string(e);
      }
      if (mono.empty())
        out += v.str();
      else if (v == Rational(1))
        out += mono;
      else
        out += v.str() + "*" + mono;
    }
    return out;
  }

  template <typename Fn>
  void for_each_term(Fn&& fn) const {
    for (const auto& [k, v] : terms_) {
      std::vector<long> exps(nvars_);
      for (int i = 0; i < nvars_; ++i) exps[i] = exp_of(k, i);
      fn(exps, v);
    }
  }

 private:
  static int check_nvars(int n) {
    if (n < 0 || n > kMaxVars)
      throw ArithmeticError("MarkPolynomial: variable count out of range");
    return n;
  }

  static long exp_of(uint64_t key, int i) {
    return static_cast<long>((key >> (8 * i)) & 0xFF);
  }

  static uint64_t clear_var(uint64_t key, int i) {
    return key & ~(uint64_t(0xFF) << (8 * i));
  }

  static uint64_t set_var(uint64_t key, int i, long e, int nvars) {
    check_exp(e);
    (void)nvars;
    return clear_var(key, i) | (uint64_t(e) << (8 * i));
  }

  static uint64_t key_of_single(int i, int nvars) {
    if (i < 0 || i >= nvars)
      throw ArithmeticError("MarkPolynomial: variable index out of range");
    return uint64_t(1) << (8 * i);
  }

  static void check_exp(long e) {
    if (e < 0 || e > kMaxExp)
      throw ArithmeticError("MarkPolynomial: exponent out of range");
  }

  static uint64_t add_keys(uint64_t a, uint64_t b, int nvars) {
    uint64_t r = 0;
    for (int i = 0; i < nvars; ++i) {
      long e = exp_of(a, i) + exp_of(b, i);
      check_exp(e);
      r |= uint64_t(e) << (8 * i);
    }
    return r;
  }

  uint64_t pack(const std::vector<long>& exps) const {
    uint64_t k = 0;
    for (int i = 0; i < nvars_ && i < static_cast<int>(exps.size()); ++i) {
      check_exp(exps[i]);
      k |= uint64_t(exps[i]) << (8 * i);
    }
    return k;
  }

  void require_same(const MarkPolynomial& o) const {
    if (nvars_ != o.nvars_)
      throw ArithmeticError("MarkPolynomial: mixed variable counts");
  }

  void add_term(uint64_t k, const Rational& v) {
    if (v.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, v);
    if (!inserted) {
      it->second += v;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  int nvars_;
  std::map<uint64_t, Rational> terms_;
};

}  // namespace emtree
