#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "emtree/fixed_point.hpp"
#include "emtree/series.hpp"
#include "emtree/small_labels.hpp"
#include "emtree/ternary_gf.hpp"
#include "emtree/trees.hpp"

namespace emtree {

/// Laurent polynomial in one indeterminate over Rational.
class LaurentPoly {
 public:
  LaurentPoly() = default;

  void add(long exp, const Rational& v) {
    if (v.is_zero()) return;
    auto [it, inserted] = c_.try_emplace(exp, v);
    if (!inserted) {
      it->second += v;
      if (it->second.is_zero()) c_.erase(it);
    }
  }

  Rational coeff(long exp) const {
    auto it = c_.find(exp);
    return it == c_.end() ? Rational(0) : it->second;
  }

  bool is_zero() const { return c_.empty(); }
  long min_exp() const { return c_.empty() ? 0 : c_.begin()->first; }
  long max_exp() const { return c_.empty() ? 0 : c_.rbegin()->first; }

  /// Evaluate X^{-min_exp} * this at a power series argument.
  Series eval_cleared(const Series& x) const {
    Series acc(x.order());
    long base = min_exp();
    for (const auto& [e, v] : c_) acc += v * pow(x, e - base);
    return acc;
  }

  std::string str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (const auto& [e, v] : c_) {
      if (!out.empty()) out += " + ";
      if (e == 0)
        out += v.str();
      else {
        out += (v == Rational(1)) ? "" : v.str() + "*";
        out += "X^" + std::to_string(e);
      }
    }
    return out;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.c_ == b.c_;
  }

 private:
  std::map<long, Rational> c_;
};

/// Characteristic polynomial of an embedding: sum of X^{b} over the per-slot
/// label offsets b.
inline LaurentPoly characteristic_poly(const std::vector<int>& offsets) {
  LaurentPoly p;
  for (int b : offsets) p.add(b, Rational(1));
  return p;
}

/// Outcome of hunting for a power-series root X of the kernel equation
/// X = z T^{d-1} X P(X), with P the characteristic polynomial.
struct CharRootReport {
  bool solvable = false;
  std::string diagnostic;
  Series root;  // meaningful only when solvable
};

/// A nonzero power-series root exists exactly when the smallest offset is
/// -1: the equation then reads X = z T^{d-1} sum_b X^{b+1} and is a z-adic
/// contraction. Smallest offset 0 or more forces the zero series; smallest
/// offset -u with u >= 2 would force the impossible valuation 1/u.
inline CharRootReport char_root_for(const std::vector<int>& offsets,
                                    long order) {
  CharRootReport rep;
  const int d = static_cast<int>(offsets.size());
  if (d < 2) {
    rep.diagnostic = "arity below 2";
    return rep;
  }
  int min_b = *std::min_element(offsets.begin(), offsets.end());
  if (min_b >= 0) {
    rep.diagnostic =
        "kernel equation X = z T^{d-1} X P(X) with all offsets nonnegative "
        "is only solved by the zero series";
    return rep;
  }
  if (min_b <= -2) {
    long u = -static_cast<long>(min_b);
    rep.diagnostic =
        "no power-series root: clearing X^{-" + std::to_string(u) +
        "} gives X^{" + std::to_string(u) +
        "} = z * (unit), which would need valuation 1/" + std::to_string(u);
    return rep;
  }
  Series t = tree_series(d, order);
  Series seed(order);
  auto F = [&](const Series& x) {
    long n = x.order();
    Series acc(n);
    for (int b : offsets) acc += pow(x, b + 1);
    return (pow(t.truncated(n), d - 1) * acc).shift_up(1);
  };
  rep.root = fixed_point_solve_progressive(F, seed);
  rep.solvable = true;
  rep.diagnostic = "power-series root with valuation 1";
  return rep;
}

/// Binary root by the quadratic formula, X = (1 - sqrt(1 - 4 z^2 T^2)) /
/// (2 z T), as a cross-check of the kernel route.
inline Series binary_char_root_sqrt(long order) {
  Series t = tree_series(2, order + 1);
  Series zt = t.shift_up(1);
  Series one = Series::constant(Rational(1), order + 1);
  Series root = sqrt_one_plus(one - Rational(4) * zt * zt);
  return (one - root) / (Rational(2) * zt);
}

/// Verdict on transplanting the closed label-bound family to the
/// (2d+1)-ary embedding with consecutive offsets -d..d: the family
///   T_j = T (1 - l X^{d+1+j})(1 - l X^{2d+3+j})
///         / ((1 - l X^{d+2+j})(1 - l X^{2d+2+j}))
/// needs the characteristic root X, which exists only for d = 1, where the
/// check runs as an exact identity in l; for d >= 2 the obstruction is
/// reported instead.
struct FamilyCheckReport {
  bool applicable = false;
  bool passed = false;
  std::string diagnostic;
};

inline FamilyCheckReport formal_family_check(long d, long j, long order) {
  FamilyCheckReport rep;
  if (d < 1) {
    rep.diagnostic = "family parameter d must be >= 1";
    return rep;
  }
  std::vector<int> offsets;
  for (long b = -d; b <= d; ++b) offsets.push_back(static_cast<int>(b));
  if (d == 1) {
    rep.applicable = true;
    rep.passed = check_solution_family(j, order);
    rep.diagnostic = rep.passed ? "family solves the node equation exactly"
                                : "family fails the node equation";
    return rep;
  }
  rep.diagnostic = char_root_for(offsets, order).diagnostic;
  return rep;
}

}  // namespace emtree
