#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "emtree/emtree.hpp"

using namespace emtree;

namespace {

std::vector<CheckResult> frozen_label_bound(long j,
                                            const std::vector<long>& want) {
  auto out = suite_label_bound_routes(j, static_cast<long>(want.size()) - 1);
  Series closed = max_label_series_closed(j, static_cast<long>(want.size()) - 1);
  bool ok = true;
  std::string bad;
  for (size_t n = 0; n < want.size(); ++n)
    if (closed.coeff(static_cast<long>(n)) != Rational(want[n])) {
      ok = false;
      bad = "n=" + std::to_string(n) + ": got " +
            closed.coeff(static_cast<long>(n)).str() + ", expected " +
            std::to_string(want[n]);
      break;
    }
  out.push_back({"frozen coefficient check", ok, bad});
  return out;
}

std::vector<CheckResult> leaf_grid_checks(long n_max) {
  std::vector<CheckResult> out;
  for (long n = 0; n <= n_max; ++n) {
    bool grid = true, mirror = true;
    for (long m1 = 0; m1 <= n && grid && mirror; ++m1)
      for (long m2 = 0; m1 + m2 <= n && grid && mirror; ++m2)
        for (long m3 = 0; m1 + m2 + m3 <= n && grid && mirror; ++m3)
          for (long s = 0; s <= 2 * n && grid && mirror; ++s) {
            Int a = ternary_leaf_depth_count(n, s, m1, m2, m3);
            grid = a == dary_leaf_depth_count(3, n, s, {m1, m2, m3});
            mirror = a == ternary_leaf_depth_count(n, 2 * n - s, m3, m2, m1);
          }
    out.push_back({"ternary=dary grid n=" + std::to_string(n), grid, ""});
    out.push_back({"mirror symmetry n=" + std::to_string(n), mirror, ""});
    Rational sum(0);
    for (const auto& [key, p] : leaf_depth_distribution(3, n)) sum += p;
    out.push_back({"distribution sums to 1, n=" + std::to_string(n),
                   sum == Rational(1), sum.str()});
  }
  return out;
}

std::vector<CheckResult> leaf_totality_checks(long n_total, long n_binary) {
  std::vector<CheckResult> out;
  for (int d : {2, 3, 4})
    for (long n = 0; n <= n_total; ++n) {
      Int sum(0);
      for (const auto& [key, c] : leaf_depth_table(d, n)) sum += c;
      Int want = Int((d - 1) * n + 1) * dary_tree_count(d, n);
      out.push_back({"totality d=" + std::to_string(d) + " n=" +
                         std::to_string(n),
                     sum == want, ""});
    }
  for (long n = 0; n <= n_binary; ++n)
    out.push_back({"binary table=oracle n=" + std::to_string(n),
                   leaf_depth_table(2, n) == oracle_leaf_depth_table(2, n),
                   ""});
  return out;
}

struct Criterion {
  int id;
  std::string name;
  double budget_s;  // 0 = report time only
  std::function<std::vector<CheckResult>()> run;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "label bound 0: explicit formula, closed form, and system agree on "
          "n<=6",
       1.0,
       [] { return frozen_label_bound(0, {1, 1, 2, 6, 22, 91, 408}); }},
      {2, "label bound 1: explicit formula, closed form, and system agree on "
          "n<=6",
       1.0,
       [] { return frozen_label_bound(1, {1, 1, 3, 11, 46, 209, 1006}); }},
      {3, "closed forms equal node-equation systems (bounds j<=10 N=30, marks "
          "j<=6 N=20)",
       30.0,
       [] { return suite_closed_vs_system(10, 30, 6, 20); }},
      {4, "enumeration oracle n<=8: label bounds, marked series, leaf tables",
       600.0,
       [] { return suite_master_oracle(8, 8, 3, 2); }},
      {5, "leaf statistics n<=8: two routes, mirror symmetry, distribution",
       0.0,
       [] { return leaf_grid_checks(8); }},
      {6, "leaf totality d=2,3,4 n<=6 and binary oracle table n<=10",
       0.0,
       [] { return leaf_totality_checks(6, 10); }},
      {7, "tree power coefficients by three routes, n<=20 k<=6 d=2,3,4",
       0.0,
       [] { return suite_power_coeffs(20, 6); }},
      {8, "characteristic root identities exact to order 50",
       0.0,
       [] { return suite_x_identities(50); }},
      {9, "one-parameter family j=-3..5 and continued fractions m<=3, order 12",
       0.0,
       [] {
         auto out = suite_lambda_family(-3, 5, 12);
         auto cf = suite_gen1(3, 12);
         out.insert(out.end(), cf.begin(), cf.end());
         return out;
       }},
      {10, "real evaluation against partial sums at the stated tolerances",
       1.0,
       [] { return suite_cardano(); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<CheckResult> results;
    std::string error;
    try {
      results = c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    bool checks_ok = error.empty() && !results.empty() && all_passed(results);
    bool time_ok = c.budget_s <= 0.0 || secs < c.budget_s;
    bool pass = checks_ok && time_ok;
    if (!pass) ++failed;
    if (c.budget_s > 0.0)
      std::printf("%s %2d  %s  (%.2fs < %.0fs)\n", pass ? "PASS" : "FAIL",
                  c.id, c.name.c_str(), secs, c.budget_s);
    else
      std::printf("%s %2d  %s  (%.2fs)\n", pass ? "PASS" : "FAIL", c.id,
                  c.name.c_str(), secs);
    if (!error.empty()) std::printf("      error: %s\n", error.c_str());
    if (!checks_ok && error.empty()) {
      int shown = 0;
      for (const auto& r : results)
        if (!r.pass && shown < 8) {
          std::printf("      failed: %s%s%s\n", r.name.c_str(),
                      r.detail.empty() ? "" : " -- ", r.detail.c_str());
          ++shown;
        }
    }
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n",
              static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
