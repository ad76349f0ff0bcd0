#pragma once

#include <map>
#include <utility>
#include <vector>

#include "emtree/combinatorics.hpp"
#include "emtree/ternary_gf.hpp"
#include "emtree/trees.hpp"

namespace emtree {

/// Joint leaf statistics: the number of d-ary trees with n internal nodes
/// whose external node number s (left-to-right) has edge profile m, where
/// m[l] counts slot-l edges on the root path. Summing over (s, m) gives
/// ((d-1)n + 1) trees-worth of incidences, one per leaf.

/// Product route: split the tree along the root path of leaf s. With
/// M1 = sum m[l] and displacement W = sum l m[l], position and profile are
/// tied by s = W + (d-1) i where i counts whole subtrees hanging to the
/// left; the remainder r = n - M1 - i hangs to the right. Each side is a
/// forest counted by a power of T.
inline Int dary_leaf_depth_count(int d, long n, long s,
                                 const std::vector<long>& m) {
  if (d < 2 || static_cast<int>(m.size()) != d)
    throw TreeError("dary_leaf_depth_count: profile size must equal arity");
  if (n < 0 || s < 0 || s > static_cast<long>(d - 1) * n) return Int(0);
  long M1 = 0, W = 0;
  for (int l = 0; l < d; ++l) {
    if (m[l] < 0) return Int(0);
    M1 += m[l];
    W += static_cast<long>(l) * m[l];
  }
  if (M1 > n) return Int(0);
  if ((s - W) % (d - 1) != 0 || s < W) return Int(0);
  long i = (s - W) / (d - 1);
  long r = n - M1 - i;
  if (i < 0 || r < 0) return Int(0);
  return multinomial(m) * tree_power_coeff(d, i, W) *
         tree_power_coeff(d, r, static_cast<long>(d - 1) * M1 - W);
}

/// Independent ternary route with the branch structure of the closed
/// formula: two boundary branches (profiles touching only the extreme
/// slots pin s to an end) and a general branch parametrized by
/// s = 2 s1 + s2 and mu2 = (m2 - s2)/2.
inline Int ternary_leaf_depth_count(long n, long s, long m1, long m2,
                                    long m3) {
  if (n < 0 || s < 0 || s > 2 * n || m1 < 0 || m2 < 0 || m3 < 0)
    return Int(0);
  if (m1 + m2 + m3 > n) return Int(0);
  if (n == 0) return Int(s == 0 && m1 + m2 + m3 == 0 ? 1 : 0);
  if (m2 == 0 && m3 == 0) {
    if (s != 0 || m1 == 0) return Int(0);
    return (Rational(2 * m1, 3 * n - m1) *
            Rational(binomial(3 * n - m1, 2 * n)))
        .to_integer();
  }
  if (m1 == 0 && m2 == 0) {
    if (s != 2 * n) return Int(0);
    return (Rational(2 * m3, 3 * n - m3) *
            Rational(binomial(3 * n - m3, 2 * n)))
        .to_integer();
  }
  long s2 = s % 2;
  long s1 = (s - s2) / 2;
  if ((m2 - s2) % 2 != 0) return Int(0);
  long mu2 = (m2 - s2) / 2;
  if (mu2 < 0) return Int(0);
  long i = s1 - m3 - mu2;
  long r = n - m1 - m2 - s1 + mu2;
  if (i < 0 || r < 0) return Int(0);
  long d1 = 3 * s1 + s2 - m3 - mu2;
  long d2 = 3 * n - m1 - 2 * m2 - 3 * s1 + 3 * mu2;
  Rational count = Rational(2 * m3 + m2) * Rational(2 * m1 + m2) *
                   Rational(multinomial({m1, m2, m3})) *
                   Rational(binomial(d1, i)) * Rational(binomial(d2, r)) /
                   Rational(Int(Int(d1) * Int(d2)));
  return count.to_integer();
}

using LeafDepthTable = std::map<std::pair<long, std::vector<long>>, Int>;

/// All nonzero (s, profile) counts for given d and n.
inline LeafDepthTable leaf_depth_table(int d, long n) {
  LeafDepthTable table;
  std::vector<long> m(d, 0);
  auto rec = [&](auto&& self, int slot, long rest) -> void {
    if (slot == d - 1) {
      m[slot] = 0;
      // Close the profile with every admissible count in the last slot.
      for (long v = 0; v <= rest; ++v) {
        m[slot] = v;
        for (long s = 0; s <= static_cast<long>(d - 1) * n; ++s) {
          Int c = dary_leaf_depth_count(d, n, s, m);
          if (c > 0) table[{s, m}] = c;
        }
      }
      m[slot] = 0;
      return;
    }
    for (long v = 0; v <= rest; ++v) {
      m[slot] = v;
      self(self, slot + 1, rest - v);
    }
    m[slot] = 0;
  };
  rec(rec, 0, n);
  return table;
}

/// Probability of each (s, profile) for a uniform leaf of a uniform tree.
inline std::map<std::pair<long, std::vector<long>>, Rational>
leaf_depth_distribution(int d, long n) {
  Rational total =
      Rational(Int(Int((d - 1) * n + 1) * dary_tree_count(d, n)));
  std::map<std::pair<long, std::vector<long>>, Rational> dist;
  for (const auto& [key, c] : leaf_depth_table(d, n))
    dist[key] = Rational(c) / total;
  return dist;
}

}  // namespace emtree
