#pragma once

#include <cstdlib>
#include <map>
#include <utility>
#include <vector>

#include "emtree/leaf_depths.hpp"
#include "emtree/poly_series.hpp"
#include "emtree/series.hpp"
#include "emtree/trees.hpp"

namespace emtree {

/// Brute-force counterparts of every closed-form quantity, computed purely
/// by enumerating trees and reading the statistic off each one. These are
/// the ground truth the generating-function routes are tested against.

inline Int oracle_tree_count(int d, long n) {
  return Int(static_cast<long>(enumerated_trees(d, n).size()));
}

/// Number of ternary trees (root label 0) whose internal labels all stay
/// at most j.
inline Int oracle_max_label_count(long j, long n) {
  auto offsets = natural_offsets(3);
  Int count(0);
  for (const auto& t : enumerated_trees(3, n)) {
    auto top = max_label(t, offsets);
    if (!top || *top <= j) count += 1;
  }
  return count;
}

inline Series oracle_max_label_series(long j, long n_max) {
  Series s(n_max);
  for (long n = 0; n <= n_max; ++n)
    s.set_coeff(n, Rational(oracle_max_label_count(j, n)));
  return s;
}

/// [z^n] of the marked series rooted at label j: each internal node at
/// label l with |l| <= m contributes a factor u_{|l|}.
inline MarkPolynomial oracle_label_mark_coeff(long j, long m, long n) {
  auto offsets = natural_offsets(3);
  const int nv = static_cast<int>(m + 1);
  MarkPolynomial acc(nv);
  for (const auto& t : enumerated_trees(3, n)) {
    std::vector<long> exps(nv, 0);
    for (int l : internal_labels(t, offsets, static_cast<int>(j)))
      if (std::abs(l) <= m) ++exps[std::abs(l)];
    acc += MarkPolynomial::monomial(exps, Rational(1), nv);
  }
  return acc;
}

inline PolySeries oracle_label_mark_series(long j, long m, long n_max) {
  std::vector<std::string> vars;
  for (long i = 0; i <= m; ++i) vars.push_back("u" + std::to_string(i));
  PolySeries s(n_max, vars);
  for (long n = 0; n <= n_max; ++n)
    s.set_coeff(n, oracle_label_mark_coeff(j, m, n));
  return s;
}

/// Full (s, profile) -> count table read off the enumeration.
inline LeafDepthTable oracle_leaf_depth_table(int d, long n) {
  LeafDepthTable table;
  for (const auto& t : enumerated_trees(d, n))
    for (const auto& lp : leaf_profiles(t)) {
      auto [it, inserted] = table.try_emplace({lp.s, lp.m}, Int(1));
      if (!inserted) it->second += 1;
    }
  return table;
}

/// [z^n] T^k as the number of k-forests, by convolving enumerated tree
/// counts.
inline Int oracle_power_coeff(int d, long n, long k) {
  if (n < 0 || k < 0) return Int(0);
  std::vector<Int> c(n + 1);
  for (long i = 0; i <= n; ++i) c[i] = oracle_tree_count(d, i);
  std::vector<Int> acc(n + 1, Int(0));
  acc[0] = 1;
  for (long f = 0; f < k; ++f) {
    std::vector<Int> next(n + 1, Int(0));
    for (long i = 0; i <= n; ++i) {
      if (acc[i] == 0) continue;
      for (long s = 0; i + s <= n; ++s) next[i + s] += acc[i] * c[s];
    }
    acc = std::move(next);
  }
  return acc[n];
}

}  // namespace emtree
