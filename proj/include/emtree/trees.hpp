#pragma once

#include <cstdlib>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "emtree/combinatorics.hpp"
#include "emtree/rational.hpp"

namespace emtree {

/// Rooted d-ary tree in flat form: each internal node stores d child slots,
/// -1 marking an external (leaf) slot, otherwise the index of an internal
/// node. Node 0 is the root. The empty tree (zero internal nodes, a single
/// external node) has an empty child array.
struct DaryTree {
  int arity = 3;
  std::vector<int> children;  // arity entries per internal node

  long internal_count() const {
    return static_cast<long>(children.size()) / arity;
  }
  bool empty() const { return children.empty(); }
  int child(long node, int slot) const { return children[node * arity + slot]; }
};

struct TreeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Number of d-ary trees with n internal nodes: C(dn, n) / ((d-1)n + 1).
inline Int dary_tree_count(int d, long n) {
  if (n < 0) return Int(0);
  return binomial(Int(d) * n, Int(n)) / Int((d - 1) * n + 1);
}

/// Hard guard on enumeration size, overridable via EMBEDDED_TREES_CAP.
inline long enumeration_cap() {
  if (const char* env = std::getenv("EMBEDDED_TREES_CAP")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 12;
}

namespace detail {

/// Append `sub` to `out`, returning the root index of the copy (-1 if empty).
inline int append_subtree(DaryTree& out, const DaryTree& sub) {
  if (sub.empty()) return -1;
  int base = static_cast<int>(out.internal_count());
  for (size_t i = 0; i < sub.children.size(); ++i) {
    int c = sub.children[i];
    out.children.push_back(c < 0 ? -1 : c + base);
  }
  return base;
}

inline void enumerate_rec(int d, long n, bool reversed,
                          std::vector<std::vector<DaryTree>>& memo) {
  if (static_cast<long>(memo.size()) > n && !memo[n].empty()) return;
  if (static_cast<long>(memo.size()) <= n) memo.resize(n + 1);
  if (n == 0) {
    memo[0] = {DaryTree{d, {}}};
    return;
  }
  for (long k = 0; k < n; ++k) enumerate_rec(d, k, reversed, memo);
  std::vector<DaryTree> result;
  // Compositions of n-1 into d ordered parts, lexicographic by the sizes
  // vector (or reversed when asked, to exercise order invariance).
  std::vector<long> sizes(d, 0);
  sizes[d - 1] = n - 1;
  auto emit = [&](const std::vector<long>& sz) {
    // Cartesian product over subtree choices, slot-0-major.
    std::vector<size_t> idx(d, 0);
    while (true) {
      DaryTree t{d, std::vector<int>(d, -1)};
      // Reserve slots in the root first, then graft subtree copies.
      std::vector<int> roots(d, -1);
      for (int s = 0; s < d; ++s)
        roots[s] = append_subtree(t, memo[sz[s]][idx[s]]);
      for (int s = 0; s < d; ++s) t.children[s] = roots[s];
      result.push_back(std::move(t));
      int s = d - 1;
      while (s >= 0 && ++idx[s] == memo[sz[s]].size()) idx[s--] = 0;
      if (s < 0) break;
    }
  };
  // Generate compositions in lexicographic order.
  std::vector<long> comp(d, 0);
  std::vector<std::vector<long>> comps;
  auto gen = [&](auto&& self, int slot, long rest) -> void {
    if (slot == d - 1) {
      comp[slot] = rest;
      comps.push_back(comp);
      return;
    }
    for (long v = 0; v <= rest; ++v) {
      comp[slot] = v;
      self(self, slot + 1, rest - v);
    }
  };
  gen(gen, 0, n - 1);
  if (reversed)
    for (auto it = comps.rbegin(); it != comps.rend(); ++it) emit(*it);
  else
    for (const auto& c : comps) emit(c);
  memo[n] = std::move(result);
}

}  // namespace detail

/// All d-ary trees with n internal nodes in a deterministic order; the
/// reversed flag flips the composition order (same multiset of trees).
inline std::vector<DaryTree> enumerate_trees(int d, long n,
                                             bool reversed = false) {
  if (d < 2 || d > 9) throw TreeError("enumerate_trees: arity must be 2..9");
  if (n < 0) throw TreeError("enumerate_trees: negative size");
  if (n > enumeration_cap())
    throw TreeError("enumerate_trees: size " + std::to_string(n) +
                    " exceeds cap " + std::to_string(enumeration_cap()) +
                    " (set EMBEDDED_TREES_CAP to raise)");
  std::vector<std::vector<DaryTree>> memo;
  detail::enumerate_rec(d, n, reversed, memo);
  return std::move(memo[n]);
}

/// Shared read-only enumeration cache (single-threaded use).
inline const std::vector<DaryTree>& enumerated_trees(int d, long n) {
  static std::map<std::pair<int, long>, std::vector<DaryTree>> cache;
  auto key = std::make_pair(d, n);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, enumerate_trees(d, n)).first;
  return it->second;
}

/// Per-slot label displacement of the natural embedding: consecutive
/// centered offsets for odd arity, centered odd offsets for even arity
/// (binary gives -1, +1; ternary gives -1, 0, +1).
inline std::vector<int> natural_offsets(int d) {
  std::vector<int> b(d);
  for (int s = 0; s < d; ++s) b[s] = (d % 2 == 1) ? s - (d - 1) / 2 : 2 * s - d + 1;
  return b;
}

/// Labels of internal nodes (index-aligned with nodes): the root gets
/// root_label, a child in slot s adds offsets[s].
inline std::vector<int> internal_labels(const DaryTree& t,
                                        const std::vector<int>& offsets,
                                        int root_label = 0) {
  if (static_cast<int>(offsets.size()) != t.arity)
    throw TreeError("internal_labels: offsets size must equal arity");
  std::vector<int> lab(t.internal_count(), 0);
  if (t.empty()) return lab;
  lab[0] = root_label;
  // Children always follow their parent in the flat layout, so one forward
  // pass sees every parent before its children.
  for (long v = 0; v < t.internal_count(); ++v)
    for (int s = 0; s < t.arity; ++s) {
      int c = t.child(v, s);
      if (c >= 0) lab[c] = lab[v] + offsets[s];
    }
  return lab;
}

/// Largest internal label, or nullopt for the empty tree.
inline std::optional<int> max_label(const DaryTree& t,
                                    const std::vector<int>& offsets,
                                    int root_label = 0) {
  if (t.empty()) return std::nullopt;
  auto lab = internal_labels(t, offsets, root_label);
  return *std::max_element(lab.begin(), lab.end());
}

/// Histogram of internal labels.
inline std::map<int, long> label_histogram(const DaryTree& t,
                                           const std::vector<int>& offsets,
                                           int root_label = 0) {
  std::map<int, long> h;
  for (int v : internal_labels(t, offsets, root_label)) ++h[v];
  return h;
}

/// Edge profile of one external node: position s in left-to-right order and
/// per-slot edge counts m[0..d-1] along its root path.
struct LeafProfile {
  long s = 0;
  std::vector<long> m;
};

/// Profiles of all external nodes, in left-to-right order (s = 0, 1, ...).
/// The empty tree has one external node with an all-zero profile.
inline std::vector<LeafProfile> leaf_profiles(const DaryTree& t) {
  std::vector<LeafProfile> out;
  std::vector<long> m(t.arity, 0);
  long s = 0;
  auto walk = [&](auto&& self, int node) -> void {
    if (node < 0) {
      out.push_back({s++, m});
      return;
    }
    for (int slot = 0; slot < t.arity; ++slot) {
      ++m[slot];
      self(self, t.child(node, slot));
      --m[slot];
    }
  };
  if (t.empty())
    out.push_back({0, m});
  else
    walk(walk, 0);
  return out;
}

/// One external node as a point of the embedding: depth, label, and the
/// root path as a word over '1'..'9' slot digits.
struct LeafPoint {
  long depth = 0;
  long label = 0;
  std::string word;

  friend bool operator==(const LeafPoint& a, const LeafPoint& b) {
    return a.depth == b.depth && a.label == b.label && a.word == b.word;
  }
  friend bool operator<(const LeafPoint& a, const LeafPoint& b) {
    return a.word < b.word;
  }
};

inline std::vector<LeafPoint> leaf_points(const DaryTree& t,
                                          const std::vector<int>& offsets,
                                          int root_label = 0) {
  if (static_cast<int>(offsets.size()) != t.arity)
    throw TreeError("leaf_points: offsets size must equal arity");
  if (t.arity > 9) throw TreeError("leaf_points: slot digits support arity <= 9");
  std::vector<LeafPoint> out;
  std::string word;
  long label = root_label;
  auto walk = [&](auto&& self, int node) -> void {
    if (node < 0) {
      out.push_back({static_cast<long>(word.size()), label, word});
      return;
    }
    for (int slot = 0; slot < t.arity; ++slot) {
      word.push_back(static_cast<char>('1' + slot));
      label += offsets[slot];
      self(self, t.child(node, slot));
      label -= offsets[slot];
      word.pop_back();
    }
  };
  if (t.empty())
    out.push_back({0, root_label, ""});
  else
    walk(walk, 0);
  return out;
}

/// A leaf point set is valid when the words are exactly the external slots
/// of one d-ary tree and each depth/label is consistent with its word.
inline bool validate_point_set(const std::vector<LeafPoint>& points, int d,
                               const std::vector<int>& offsets,
                               int root_label = 0) {
  if (points.empty()) return false;
  if (static_cast<int>(offsets.size()) != d) return false;
  // Depth and label must be recomputable from the word.
  for (const auto& p : points) {
    long label = root_label;
    for (char c : p.word) {
      if (c < '1' || c >= static_cast<char>('1' + d)) return false;
      label += offsets[c - '1'];
    }
    if (p.depth != static_cast<long>(p.word.size())) return false;
    if (p.label != label) return false;
  }
  // The word set must form a complete d-ary frontier: rebuilding the tree
  // from the words must consume each word exactly once with no gaps.
  std::vector<std::string> words;
  for (const auto& p : points) words.push_back(p.word);
  std::sort(words.begin(), words.end());
  for (size_t i = 1; i < words.size(); ++i)
    if (words[i] == words[i - 1]) return false;
  size_t pos = 0;
  auto consume = [&](auto&& self, const std::string& prefix) -> bool {
    if (pos < words.size() && words[pos] == prefix) {
      ++pos;
      return true;
    }
    if (prefix.size() >= 64) return false;  // runaway guard
    for (int slot = 0; slot < d; ++slot) {
      if (!self(self, prefix + static_cast<char>('1' + slot))) return false;
    }
    return true;
  };
  // Sorted words over '1'..'9' visit external slots in traversal order.
  return consume(consume, "") && pos == words.size();
}

/// Nested serialization: external node "." and internal node
/// "(c1,...,cd)". The empty tree is ".".
inline std::string serialize_tree(const DaryTree& t) {
  auto rec = [&](auto&& self, int node) -> std::string {
    if (node < 0) return ".";
    std::string out = "(";
    for (int s = 0; s < t.arity; ++s) {
      if (s) out += ",";
      out += self(self, t.child(node, s));
    }
    return out + ")";
  };
  return t.empty() ? "." : rec(rec, 0);
}

inline DaryTree parse_tree(const std::string& text, int d) {
  DaryTree t{d, {}};
  size_t pos = 0;
  auto rec = [&](auto&& self) -> int {
    if (pos >= text.size()) throw TreeError("parse_tree: truncated input");
    if (text[pos] == '.') {
      ++pos;
      return -1;
    }
    if (text[pos] != '(') throw TreeError("parse_tree: expected '(' or '.'");
    ++pos;
    int node = static_cast<int>(t.internal_count());
    t.children.insert(t.children.end(), d, -1);
    for (int s = 0; s < d; ++s) {
      if (s) {
        if (pos >= text.size() || text[pos] != ',')
          throw TreeError("parse_tree: expected ','");
        ++pos;
      }
      t.children[node * d + s] = self(self);
    }
    if (pos >= text.size() || text[pos] != ')')
      throw TreeError("parse_tree: expected ')'");
    ++pos;
    return node;
  };
  int root = rec(rec);
  if (pos != text.size()) throw TreeError("parse_tree: trailing characters");
  if (root != 0 && !(root == -1 && t.empty()))
    throw TreeError("parse_tree: malformed layout");
  return t;
}

}  // namespace emtree
