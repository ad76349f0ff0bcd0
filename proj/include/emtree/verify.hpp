#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "emtree/dary_frontier.hpp"
#include "emtree/label_marks.hpp"
#include "emtree/leaf_depths.hpp"
#include "emtree/oracle.hpp"
#include "emtree/small_labels.hpp"
#include "emtree/ternary_gf.hpp"

namespace emtree {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

inline bool all_passed(const std::vector<CheckResult>& rs) {
  for (const auto& r : rs)
    if (!r.pass) return false;
  return true;
}

namespace detail {

inline void push(std::vector<CheckResult>& out, const std::string& name,
                 bool pass, const std::string& detail = "") {
  out.push_back({name, pass, detail});
}

}  // namespace detail

/// Coefficients of the label-bound series through three routes: explicit
/// formula, closed form in X, and the node-equation system.
inline std::vector<CheckResult> suite_label_bound_routes(long j, long n_max) {
  std::vector<CheckResult> out;
  Series closed = max_label_series_closed(j, n_max);
  Series system = max_label_series_system(j, n_max);
  detail::push(out, "label-bound j=" + std::to_string(j) + " closed=system",
               closed == system);
  if (j == 0 || j == 1) {
    bool ok = true;
    std::string bad;
    for (long n = 0; n <= n_max; ++n) {
      Rational f = Rational(j == 0 ? max_label0_coeff(n) : max_label1_coeff(n));
      if (f != closed.coeff(n)) {
        ok = false;
        bad = "first mismatch at n=" + std::to_string(n) + ": formula " +
              f.str() + " vs closed " + closed.coeff(n).str();
        break;
      }
    }
    detail::push(out, "label-bound j=" + std::to_string(j) + " formula=closed",
                 ok, bad);
  }
  return out;
}

inline std::vector<CheckResult> suite_small_labels(long j_max, long order,
                                                   long n_oracle) {
  std::vector<CheckResult> out;
  for (long j = -1; j <= j_max; ++j)
    detail::push(out, "label-bound j=" + std::to_string(j) + " closed=system",
                 max_label_series_closed(j, order) ==
                     max_label_series_system(j, order));
  for (long j : {0L, 1L}) {
    Series closed = max_label_series_closed(j, order);
    bool ok = true;
    for (long n = 0; n <= order && ok; ++n)
      ok = closed.coeff(n) ==
           Rational(j == 0 ? max_label0_coeff(n) : max_label1_coeff(n));
    detail::push(out, "label-bound j=" + std::to_string(j) + " formula=closed",
                 ok);
  }
  for (long j = -1; j <= j_max; ++j) {
    Series closed = max_label_series_closed(j, n_oracle);
    Series oracle = oracle_max_label_series(j, n_oracle);
    detail::push(
        out,
        "label-bound j=" + std::to_string(j) + " oracle n<=" +
            std::to_string(n_oracle),
        closed == oracle,
        closed == oracle ? "" : "closed " + closed.str() + " vs oracle " +
                                    oracle.str());
  }
  return out;
}

inline std::vector<CheckResult> suite_label_marks(long j_max, long order,
                                                  long n_oracle) {
  std::vector<CheckResult> out;
  // Single mark: closed vs system, one shared system solve.
  {
    long K = mark_system_cutoff(j_max, 0, order);
    auto S = multi_mark_system(0, K, order);
    for (long j = -1; j <= j_max; ++j)
      detail::push(out,
                   "single-mark j=" + std::to_string(j) + " closed=system",
                   single_mark_closed(j, order) == S[std::abs(j)]);
    bool deg_ok = true;
    for (long n = 0; n <= order && deg_ok; ++n)
      deg_ok = S[0].coeff(n).total_degree() <= n;
    detail::push(out, "single-mark u-degree <= n", deg_ok);
  }
  // Pair mark: closed vs system.
  {
    long K = mark_system_cutoff(j_max, 1, order);
    auto S = multi_mark_system(1, K, order);
    for (long j = -1; j <= j_max; ++j)
      detail::push(out, "pair-mark j=" + std::to_string(j) + " closed=system",
                   pair_mark_closed(j, order) == S[std::abs(j)]);
  }
  // Marks set to one collapse to the plain counting series.
  Series t = tree_series(3, order);
  detail::push(out, "single-mark at u=1 collapses to T",
               single_mark_closed(0, order).at_all_ones() == t);
  detail::push(out, "pair-mark at u=1 collapses to T",
               pair_mark_closed(0, order).at_all_ones() == t);
  // Enumeration ground truth.
  for (long m = 0; m <= 2; ++m) {
    long K = mark_system_cutoff(3, m, n_oracle);
    auto S = multi_mark_system(m, K, n_oracle);
    for (long j = 0; j <= 3; ++j) {
      PolySeries oracle = oracle_label_mark_series(j, m, n_oracle);
      detail::push(out,
                   "marks m=" + std::to_string(m) + " j=" + std::to_string(j) +
                       " system=oracle n<=" + std::to_string(n_oracle),
                   S[j] == oracle);
    }
  }
  for (long j = 0; j <= 3; ++j) {
    detail::push(out,
                 "single-mark j=" + std::to_string(j) + " closed=oracle",
                 single_mark_closed(j, n_oracle) ==
                     oracle_label_mark_series(j, 0, n_oracle));
    detail::push(out, "pair-mark j=" + std::to_string(j) + " closed=oracle",
                 pair_mark_closed(j, n_oracle) ==
                     oracle_label_mark_series(j, 1, n_oracle));
  }
  return out;
}

inline std::vector<CheckResult> suite_closed_vs_system(long tj_jmax,
                                                       long tj_order,
                                                       long sj_jmax,
                                                       long sj_order) {
  std::vector<CheckResult> out;
  for (long j = -1; j <= tj_jmax; ++j)
    detail::push(out,
                 "label-bound j=" + std::to_string(j) + " closed=system N=" +
                     std::to_string(tj_order),
                 max_label_series_closed(j, tj_order) ==
                     max_label_series_system(j, tj_order));
  {
    long K = mark_system_cutoff(sj_jmax, 0, sj_order);
    auto S = multi_mark_system(0, K, sj_order);
    for (long j = -1; j <= sj_jmax; ++j)
      detail::push(out,
                   "single-mark j=" + std::to_string(j) + " closed=system N=" +
                       std::to_string(sj_order),
                   single_mark_closed(j, sj_order) == S[std::abs(j)]);
  }
  {
    long K = mark_system_cutoff(sj_jmax, 1, sj_order);
    auto S = multi_mark_system(1, K, sj_order);
    for (long j = -1; j <= sj_jmax; ++j)
      detail::push(out,
                   "pair-mark j=" + std::to_string(j) + " closed=system N=" +
                       std::to_string(sj_order),
                   pair_mark_closed(j, sj_order) == S[std::abs(j)]);
  }
  return out;
}

inline std::vector<CheckResult> suite_leaf_depths(long n_ternary,
                                                  long n_binary,
                                                  long n_total) {
  std::vector<CheckResult> out;
  // Two closed routes agree on the full grid, zeros included.
  for (long n = 0; n <= n_ternary; ++n) {
    bool ok = true;
    std::string bad;
    for (long m1 = 0; m1 <= n && ok; ++m1)
      for (long m2 = 0; m1 + m2 <= n && ok; ++m2)
        for (long m3 = 0; m1 + m2 + m3 <= n && ok; ++m3)
          for (long s = 0; s <= 2 * n && ok; ++s) {
            Int a = ternary_leaf_depth_count(n, s, m1, m2, m3);
            Int b = dary_leaf_depth_count(3, n, s, {m1, m2, m3});
            if (a != b) {
              ok = false;
              bad = "n=" + std::to_string(n) + " s=" + std::to_string(s) +
                    " m=(" + std::to_string(m1) + "," + std::to_string(m2) +
                    "," + std::to_string(m3) + "): " + a.get_str() + " vs " +
                    b.get_str();
            }
          }
    detail::push(out, "leaf-depth ternary=dary n=" + std::to_string(n), ok,
                 bad);
  }
  for (long n = 0; n <= n_ternary; ++n)
    detail::push(out, "leaf-depth table=oracle d=3 n=" + std::to_string(n),
                 leaf_depth_table(3, n) == oracle_leaf_depth_table(3, n));
  for (long n = 0; n <= n_binary; ++n)
    detail::push(out, "leaf-depth table=oracle d=2 n=" + std::to_string(n),
                 leaf_depth_table(2, n) == oracle_leaf_depth_table(2, n));
  for (int d : {2, 3, 4})
    for (long n = 0; n <= n_total; ++n) {
      Int sum(0);
      for (const auto& [key, c] : leaf_depth_table(d, n)) sum += c;
      Int want = Int((d - 1) * n + 1) * dary_tree_count(d, n);
      detail::push(out,
                   "leaf-depth totality d=" + std::to_string(d) + " n=" +
                       std::to_string(n),
                   sum == want,
                   sum == want ? "" : sum.get_str() + " vs " + want.get_str());
    }
  // Mirror symmetry: reversing slots maps (s, m) to (2n - s, reversed m).
  for (long n = 0; n <= n_ternary; ++n) {
    bool ok = true;
    for (long m1 = 0; m1 <= n && ok; ++m1)
      for (long m2 = 0; m1 + m2 <= n && ok; ++m2)
        for (long m3 = 0; m1 + m2 + m3 <= n && ok; ++m3)
          for (long s = 0; s <= 2 * n && ok; ++s)
            ok = ternary_leaf_depth_count(n, s, m1, m2, m3) ==
                 ternary_leaf_depth_count(n, 2 * n - s, m3, m2, m1);
    detail::push(out, "leaf-depth mirror symmetry n=" + std::to_string(n), ok);
  }
  for (int d : {2, 3, 4}) {
    Rational sum(0);
    for (const auto& [key, p] : leaf_depth_distribution(d, n_total)) sum += p;
    detail::push(out,
                 "leaf-depth distribution sums to 1, d=" + std::to_string(d),
                 sum == Rational(1), sum.str());
  }
  return out;
}

inline std::vector<CheckResult> suite_power_coeffs(long n_max, long k_max) {
  std::vector<CheckResult> out;
  for (int d : {2, 3, 4}) {
    bool ok = true;
    std::string bad;
    for (long k = 0; k <= k_max && ok; ++k) {
      Series p = pow(tree_series(d, n_max), k);
      for (long n = 0; n <= n_max && ok; ++n) {
        Int a = tree_power_coeff(d, n, k);
        Int b = tree_power_coeff_expanded(d, n, k);
        Int c = p.coeff(n).to_integer();
        if (a != b || a != c) {
          ok = false;
          bad = "d=" + std::to_string(d) + " n=" + std::to_string(n) + " k=" +
                std::to_string(k) + ": " + a.get_str() + "/" + b.get_str() +
                "/" + c.get_str();
        }
      }
    }
    detail::push(out, "power coefficients three routes d=" + std::to_string(d),
                 ok, bad);
  }
  {
    bool ok = true;
    for (long k = 0; k <= 3 && ok; ++k)
      for (long n = 0; n <= 6 && ok; ++n)
        ok = tree_power_coeff(3, n, k) == oracle_power_coeff(3, n, k);
    detail::push(out, "power coefficients vs forest oracle d=3", ok);
  }
  return out;
}

inline std::vector<CheckResult> suite_x_identities(long order) {
  std::vector<CheckResult> out;
  Series x = char_root_series(order);
  Series one = Series::constant(Rational(1), order);
  Series t = tree_series(3, order);
  bool nonneg = true;
  for (long n = 0; n <= order; ++n)
    if (x.coeff(n) < Rational(0)) nonneg = false;
  detail::push(out, "X has nonnegative coefficients", nonneg);
  detail::push(out, "X vanishes at z=0", x.coeff(0) == Rational(0));
  detail::push(out, "T = (1+X+X^2)/(1+X^2)",
               t == (one + x + x * x) / (one + x * x));
  detail::push(out, "z T^2 = X/(1+X+X^2)",
               pow(t, 2).shift_up(1) == x / (one + x + x * x));
  detail::push(out, "T - 1 = X/(1+X^2)", t - one == x / (one + x * x));
  detail::push(out, "(1+X^2)(T-1) = X", (one + x * x) * (t - one) == x);
  detail::push(out, "z T^3 = T - 1", pow(t, 3).shift_up(1) == t - one);
  detail::push(out, "X by square root route",
               char_root_series_sqrt(order) == x);
  detail::push(out, "X by Catalan route", char_root_series_catalan(order) == x);
  return out;
}

inline std::vector<CheckResult> suite_lambda_family(long j_lo, long j_hi,
                                                    long order) {
  std::vector<CheckResult> out;
  for (long j = j_lo; j <= j_hi; ++j)
    detail::push(out,
                 "one-parameter family solves node equation, j=" +
                     std::to_string(j),
                 check_solution_family(j, order));
  return out;
}

inline std::vector<CheckResult> suite_gen1(long m_max, long order) {
  std::vector<CheckResult> out;
  for (long m = 0; m <= m_max; ++m)
    detail::push(out,
                 "continued fraction identity m=" + std::to_string(m),
                 check_cfrac_identity(m, order));
  return out;
}

inline std::vector<CheckResult> suite_cardano() {
  std::vector<CheckResult> out;
  Series tail = nonempty_tree_series(3, 40);
  auto check = [&](double z, double tol) {
    double gap = std::fabs(cardano_eval(z) - tail.eval_double(z));
    detail::push(out,
                 "closed evaluation at z=" + std::to_string(z) +
                     " within " + std::to_string(tol),
                 gap < tol, "difference " + std::to_string(gap));
  };
  check(0.05, 1e-12);
  check(-0.05, 1e-12);
  check(0.1, 1e-6);
  check(-0.1, 1e-6);
  bool guard = false;
  try {
    cardano_eval(0.2);
  } catch (const std::domain_error&) {
    guard = true;
  }
  detail::push(out, "evaluation rejects |z| beyond 4/27", guard);
  return out;
}

inline std::vector<CheckResult> suite_master_oracle(long n_max, long label_jmax,
                                                    long mark_jmax,
                                                    long mark_mmax) {
  std::vector<CheckResult> out;
  for (long j = -1; j <= label_jmax; ++j)
    detail::push(out,
                 "oracle label-bound j=" + std::to_string(j) + " n<=" +
                     std::to_string(n_max),
                 max_label_series_closed(j, n_max) ==
                     oracle_max_label_series(j, n_max));
  for (long m = 0; m <= mark_mmax; ++m) {
    long K = mark_system_cutoff(mark_jmax, m, n_max);
    auto S = multi_mark_system(m, K, n_max);
    for (long j = 0; j <= mark_jmax; ++j)
      detail::push(out,
                   "oracle marks m=" + std::to_string(m) + " j=" +
                       std::to_string(j) + " n<=" + std::to_string(n_max),
                   S[j] == oracle_label_mark_series(j, m, n_max));
  }
  for (long n = 0; n <= n_max; ++n)
    detail::push(out, "oracle leaf-depth table n=" + std::to_string(n),
                 leaf_depth_table(3, n) == oracle_leaf_depth_table(3, n));
  return out;
}

inline std::vector<CheckResult> suite_frontier(long order) {
  std::vector<CheckResult> out;
  // Ternary kernel root equals the dedicated construction.
  auto ternary = char_root_for(natural_offsets(3), order);
  detail::push(out, "ternary kernel root matches X",
               ternary.solvable && ternary.root == char_root_series(order),
               ternary.diagnostic);
  // Binary kernel root against the quadratic formula.
  auto binary = char_root_for(natural_offsets(2), order);
  detail::push(out, "binary kernel root matches square-root form",
               binary.solvable && binary.root == binary_char_root_sqrt(order),
               binary.diagnostic);
  // Family transplant: d = 1 must verify, d >= 2 must report the
  // obstruction rather than pretend.
  auto d1 = formal_family_check(1, 0, order);
  detail::push(out, "family check d=1", d1.applicable && d1.passed,
               d1.diagnostic);
  for (long d : {2L, 3L}) {
    auto rep = formal_family_check(d, 0, order);
    detail::push(out,
                 "family check d=" + std::to_string(d) +
                     " reports valuation obstruction",
                 !rep.applicable &&
                     rep.diagnostic.find("valuation") != std::string::npos,
                 rep.diagnostic);
  }
  return out;
}

}  // namespace emtree
