#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "emtree/emtree.hpp"
#include "json.hpp"

namespace {

struct Cell {
  std::string name;
  std::string value;
  bool numeric = false;
};
using Row = std::vector<Cell>;

struct Printer {
  std::string format = "text";
  bool header_done = false;

  void row(const Row& cells) {
    if (format == "json-lines") {
      nlohmann::json obj;
      for (const auto& c : cells) {
        if (c.numeric)
          obj[c.name] = std::stoll(c.value);
        else
          obj[c.name] = c.value;
      }
      std::cout << obj.dump() << "\n";
      return;
    }
    if (!header_done) {
      std::vector<std::string> names;
      for (const auto& c : cells) names.push_back(c.name);
      if (format == "csv")
        std::cout << emtree::csv_join(names) << "\n";
      else
        std::cout << "# " << emtree::csv_join(names) << "\n";
      header_done = true;
    }
    std::vector<std::string> values;
    for (const auto& c : cells) values.push_back(c.value);
    if (format == "csv")
      std::cout << emtree::csv_join(values) << "\n";
    else {
      std::string line;
      for (size_t i = 0; i < cells.size(); ++i) {
        if (i) line += "  ";
        line += cells[i].name + "=" + cells[i].value;
      }
      std::cout << line << "\n";
    }
  }
};

Cell num(const std::string& name, long v) {
  return {name, std::to_string(v), true};
}
Cell big(const std::string& name, const emtree::Int& v) {
  return {name, v.get_str(), false};
}
Cell text(const std::string& name, const std::string& v) {
  return {name, v, false};
}

int emit_checks(Printer& pr, const std::string& suite,
                const std::vector<emtree::CheckResult>& rs) {
  bool ok = true;
  for (const auto& r : rs) {
    pr.row({text("suite", suite), text("check", r.name),
            text("status", r.pass ? "pass" : "FAIL"),
            text("detail", r.detail)});
    ok = ok && r.pass;
  }
  return ok ? 0 : 1;
}

std::string profile_str(const std::vector<long>& m) {
  std::string out;
  for (size_t i = 0; i < m.size(); ++i) {
    if (i) out += ";";
    out += std::to_string(m[i]);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact series, tables, and verification for naturally embedded d-ary "
      "trees"};
  app.require_subcommand(1);
  // Let --format/--cap (and verify's sizing options) appear after the
  // subcommand they apply to.
  app.fallthrough();

  std::string format = "text";
  long order = -1, n_max = -1, cap = -1;
  long d = 3, j = 0, m = 0, k = 1, n = 4, s = -1;
  app.add_option("--format", format, "text, csv, or json-lines")
      ->check(CLI::IsMember({"text", "csv", "json-lines"}));
  app.add_option("--cap", cap, "enumeration size cap override");

  auto* seq = app.add_subcommand("seq", "print exact sequences and tables");
  seq->require_subcommand(1);
  auto* q_count = seq->add_subcommand("count", "d-ary tree counts");
  q_count->add_option("--d", d, "arity");
  q_count->add_option("--n-max", n_max, "largest size");
  auto* q_label = seq->add_subcommand(
      "small-label", "trees with internal labels bounded by j");
  q_label->add_option("--j", j, "label bound (>= -1)");
  q_label->add_option("--n-max", n_max, "largest size");
  auto* q_mark = seq->add_subcommand(
      "label-mark", "marked series coefficients, root at label j");
  q_mark->add_option("--j", j, "root label");
  q_mark->add_option("--m", m, "largest marked |label|");
  q_mark->add_option("--n-max", n_max, "largest size");
  auto* q_leaf = seq->add_subcommand("leaf-depth",
                                     "leaf position/profile counts at size n");
  q_leaf->add_option("--d", d, "arity");
  q_leaf->add_option("--n", n, "tree size");
  q_leaf->add_option("--s", s, "restrict to one leaf position");
  auto* q_pow =
      seq->add_subcommand("power-coeff", "coefficients of T^k for d-ary T");
  q_pow->add_option("--d", d, "arity");
  q_pow->add_option("--k", k, "power");
  q_pow->add_option("--n-max", n_max, "largest size");

  auto* ver = app.add_subcommand("verify", "run verification checks");
  ver->require_subcommand(1);
  ver->add_option("--order", order, "series truncation order");
  ver->add_option("--n-max", n_max, "largest enumerated size");
  ver->add_option("--j", j, "largest label index");
  ver->add_option("--m", m, "largest mark range");
  auto* v_small = ver->add_subcommand("small-labels", "label-bound series");
  auto* v_marks = ver->add_subcommand("label-marks", "marked series");
  auto* v_leaf = ver->add_subcommand("leaf-depths", "leaf position tables");
  auto* v_cvs = ver->add_subcommand("closed-vs-system",
                                    "closed forms against node systems");
  auto* v_gen1 = ver->add_subcommand("gen1", "continued fraction identity");
  auto* v_lambda =
      ver->add_subcommand("lambda-family", "one-parameter family identity");
  auto* v_card = ver->add_subcommand("cardano", "real evaluation vs series");
  auto* v_x = ver->add_subcommand("x-identities", "characteristic root");
  auto* v_powc = ver->add_subcommand("power-coeffs", "power coefficients");
  auto* v_front = ver->add_subcommand("frontier", "other arities");
  auto* v_master = ver->add_subcommand("master-oracle", "all enumeration checks");
  auto* v_all = ver->add_subcommand("all", "every suite at default sizes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (cap > 0) setenv("EMBEDDED_TREES_CAP", std::to_string(cap).c_str(), 1);

  Printer pr{format};
  using namespace emtree;
  try {
    if (q_count->parsed()) {
      long top = n_max < 0 ? 10 : n_max;
      for (long i = 0; i <= top; ++i)
        pr.row({num("d", d), num("n", i), big("count", dary_tree_count(d, i))});
      return 0;
    }
    if (q_label->parsed()) {
      long top = n_max < 0 ? 10 : n_max;
      Series v = max_label_series_closed(j, top);
      for (long i = 0; i <= top; ++i)
        pr.row({num("j", j), num("n", i),
                big("count", v.coeff(i).to_integer())});
      return 0;
    }
    if (q_mark->parsed()) {
      long top = n_max < 0 ? 8 : n_max;
      PolySeries sys = label_mark_series_system(j, m, top);
      for (long i = 0; i <= top; ++i)
        pr.row({num("j", j), num("m", m), num("n", i),
                text("coefficient", sys.coeff(i).str(sys.vars()))});
      return 0;
    }
    if (q_leaf->parsed()) {
      for (const auto& [key, c] : leaf_depth_table(static_cast<int>(d), n)) {
        if (s >= 0 && key.first != s) continue;
        pr.row({num("d", d), num("n", n), num("s", key.first),
                text("profile", profile_str(key.second)), big("count", c)});
      }
      return 0;
    }
    if (q_pow->parsed()) {
      long top = n_max < 0 ? 10 : n_max;
      for (long i = 0; i <= top; ++i)
        pr.row({num("d", d), num("k", k), num("n", i),
                big("coefficient", tree_power_coeff(static_cast<int>(d), i, k))});
      return 0;
    }

    int rc = 0;
    auto run = [&](const std::string& name,
                   const std::vector<CheckResult>& rs) {
      rc = std::max(rc, emit_checks(pr, name, rs));
    };
    bool all = v_all->parsed();
    long cap_now = enumeration_cap();
    auto clamp_cap = [&](long v) { return std::min(v, cap_now); };
    if (all || v_small->parsed())
      run("small-labels",
          suite_small_labels(j ? j : 8, order < 0 ? 30 : order,
                             clamp_cap(n_max < 0 ? 6 : n_max)));
    if (all || v_marks->parsed())
      run("label-marks",
          suite_label_marks(j ? j : 4, order < 0 ? 12 : order,
                            clamp_cap(n_max < 0 ? 6 : n_max)));
    if (all || v_leaf->parsed()) {
      long top = clamp_cap(n_max < 0 ? 6 : n_max);
      run("leaf-depths", suite_leaf_depths(top, clamp_cap(top + 2), top));
    }
    if (all || v_cvs->parsed())
      run("closed-vs-system",
          suite_closed_vs_system(j ? j : 10, order < 0 ? 30 : order,
                                 j ? j : 6,
                                 order < 0 ? 20 : std::min(order, 20L)));
    if (all || v_gen1->parsed())
      run("gen1", suite_gen1(m ? m : 3, order < 0 ? 12 : order));
    if (all || v_lambda->parsed())
      run("lambda-family",
          suite_lambda_family(-3, j ? j : 5, order < 0 ? 12 : order));
    if (all || v_card->parsed()) run("cardano", suite_cardano());
    if (all || v_x->parsed())
      run("x-identities", suite_x_identities(order < 0 ? 50 : order));
    if (all || v_powc->parsed())
      run("power-coeffs", suite_power_coeffs(n_max < 0 ? 20 : n_max, 6));
    if (all || v_front->parsed())
      run("frontier", suite_frontier(order < 0 ? 12 : order));
    if (all || v_master->parsed())
      run("master-oracle",
          suite_master_oracle(clamp_cap(n_max < 0 ? 6 : n_max), j ? j : 8,
                              3, std::min(m ? m : 2, 2L)));
    return rc;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
