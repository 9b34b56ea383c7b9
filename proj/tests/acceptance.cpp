// Acceptance gate: runs every pinned check, prints one PASS/FAIL line per
// criterion with details on failure, and exits 0 only when all pass.
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "closekit/closed_forms.hpp"
#include "closekit/decision.hpp"
#include "closekit/graph.hpp"
#include "closekit/metrics.hpp"
#include "closekit/verify.hpp"

namespace {

using namespace closekit;

struct Gate {
  std::vector<std::string> failures;

  void require(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }

  void require_near(const std::string& what, double got, double want,
                    double tol) {
    if (std::fabs(got - want) <= tol) return;
    char buf[192];
    std::snprintf(buf, sizeof buf, "%s: got %.12g, want %.12g (tol %g)",
                  what.c_str(), got, want, tol);
    failures.emplace_back(buf);
  }

  void require_sweep(const SweepReport& report) {
    if (report.pass) return;
    for (const SweepEntry& e : report.entries) {
      if (e.pass) continue;
      char buf[224];
      std::snprintf(buf, sizeof buf,
                    "%s %s: formula %.12g, brute force %.12g, diff %.3g",
                    report.target.c_str(), e.instance.c_str(), e.analytic,
                    e.oracle, e.diff);
      failures.emplace_back(buf);
    }
  }
};

std::string links_text(const std::vector<Edge>& links) {
  std::string out;
  for (const Edge& e : links) {
    if (!out.empty()) out += ' ';
    out += to_string(e);
  }
  return out;
}

// Criterion 1: the 4-path payoff table, cell for cell, and its saddle point.
Gate check_path_table() {
  Gate g;
  PayoffTable table = build_payoff_table(path_graph(4));
  const std::vector<Edge> rows = {{1, 2}, {2, 3}, {3, 4}};
  const std::vector<Edge> cols = {{1, 3}, {1, 4}, {2, 4}};
  g.require(table.rows() == rows, "rows are not the three deletable links");
  g.require(table.cols() == cols, "columns are not the three addable links");
  const double want[3][3] = {
      {4.5, 4.25, 3.0}, {4.25, 4.25, 4.25}, {3.0, 4.25, 4.5}};
  if (table.rows() == rows && table.cols() == cols) {
    for (std::size_t r = 0; r < 3; ++r) {
      for (std::size_t c = 0; c < 3; ++c) {
        // Dyadic values: the match must be exact.
        g.require_near("cell delete " + to_string(rows[r]) + ", add " +
                           to_string(cols[c]),
                       table.cell(r, c), want[r][c], 0.0);
      }
    }
  }
  std::vector<SaddlePoint> saddles = find_saddle_points(table);
  g.require(saddles.size() == 1, "expected exactly one saddle point");
  if (!saddles.empty()) {
    g.require(saddles[0].removed == Edge(2, 3) &&
                  saddles[0].added == Edge(1, 4) && saddles[0].value == 4.25,
              "saddle point is not (delete (2,3), add (1,4)) with value 4.25");
  }
  return g;
}

// Criterion 2: the three fixture graphs with pinned closeness, residual,
// additional values and their normalized ratios.
Gate check_fixture_metrics() {
  Gate g;
  auto check = [&g](const std::string& name, const Graph& graph, double c,
                    double r, double a, double nr_pct, double na_pct) {
    MetricReport m = metric_report(graph);
    g.require_near(name + " closeness", m.closeness, c, 1e-9);
    g.require(m.residual.has_value() && m.additional.has_value(),
              name + " is missing a residual or additional value");
    if (m.residual) g.require_near(name + " residual", m.residual->value, r, 1e-9);
    if (m.additional) {
      g.require_near(name + " additional", m.additional->value, a, 1e-9);
    }
    if (m.nr) g.require_near(name + " nr", *m.nr, nr_pct / 100.0, 1e-4);
    if (m.na) g.require_near(name + " na", *m.na, na_pct / 100.0, 1e-4);
  };
  check("shared-vertex triangles", bowtie_graph(), 8.0, 7.0, 8.5, 87.5, 106.25);
  check("bridged triangles", bridged_triangles_graph(), 10.0, 6.0, 11.25, 60.0,
        112.5);
  check("disjoint triangles", disjoint_triangles_graph(), 6.0, 5.5, 10.0,
        91.67, 166.67);
  return g;
}

// Criterion 3: column statistics of the 6-cycle payoff table, opposite
// chords against short chords, and the winner set of every criterion.
Gate check_cycle_chords() {
  Gate g;
  PayoffTable table = build_payoff_table(cycle_graph(6));
  const std::vector<Edge> opposite = {{1, 4}, {2, 5}, {3, 6}};
  const std::vector<Edge> shorts = {{1, 3}, {1, 5}, {2, 4},
                                    {2, 6}, {3, 5}, {4, 6}};
  for (const Edge& e : opposite) {
    std::size_t c = table.col_index(e);
    std::string tag = "opposite chord " + to_string(e);
    g.require_near(tag + " max", table.col_max(c), 9.75, 1e-9);
    g.require_near(tag + " min", table.col_min(c), 9.375, 1e-9);
    g.require_near(tag + " max+min", table.col_max(c) + table.col_min(c),
                   19.125, 1e-9);
    g.require_near(tag + " mean", table.col_mean(c), 9.5, 1e-9);
    g.require_near(tag + " spread", table.col_max(c) - table.col_min(c), 0.375,
                   1e-9);
  }
  for (const Edge& e : shorts) {
    std::size_t c = table.col_index(e);
    std::string tag = "short chord " + to_string(e);
    g.require_near(tag + " max", table.col_max(c), 10.0, 1e-9);
    g.require_near(tag + " min", table.col_min(c), 9.0, 1e-9);
    g.require_near(tag + " max+min", table.col_max(c) + table.col_min(c), 19.0,
                   1e-9);
    g.require_near(tag + " mean", table.col_mean(c), 9.45833, 1e-5);
    g.require_near(tag + " spread", table.col_max(c) - table.col_min(c), 1.0,
                   1e-9);
  }
  auto winners = [&table](const Criterion& c) { return decide(table, c).best; };
  auto require_winners = [&g](const std::string& name,
                              const std::vector<Edge>& got,
                              const std::vector<Edge>& want) {
    g.require(got == want,
              name + " winners are " + links_text(got) + ", want " +
                  links_text(want));
  };
  require_winners("pessimistic", winners(Criterion::pessimistic()), opposite);
  require_winners("equal-likelihood", winners(Criterion::equal_likelihood()),
                  opposite);
  require_winners("hurwicz(0.5)", winners(Criterion::hurwicz(0.5)), opposite);
  require_winners("paper-regret", winners(Criterion::paper_regret()), opposite);
  require_winners("classical-savage", winners(Criterion::classical_savage()),
                  opposite);
  require_winners("optimistic", winners(Criterion::optimistic()), shorts);
  return g;
}

// Criterion 4: closeness formulas against the brute-force pipeline over the
// pinned parameter ranges.
Gate check_closeness_sweeps() {
  Gate g;
  for (const char* target :
       {"eq2", "eq3", "eq4", "lemma1", "lemma2", "eq6", "eq7", "eq8"}) {
    g.require_sweep(sweep(target));
  }
  return g;
}

// Criterion 5: decision formulas against the full payoff-table pipeline.
Gate check_decision_sweeps() {
  Gate g;
  for (const char* target : {"theorem1", "theorem2", "corollary1", "theorem4",
                             "theorem3", "theorem5"}) {
    g.require_sweep(sweep(target));
  }
  return g;
}

// Criterion 6: growth formulas, the lollipop shortcut and the best single
// addition on linked cliques.
Gate check_growth_sweeps() {
  Gate g;
  g.require_sweep(sweep("lollipop"));
  g.require_sweep(sweep("additional"));
  return g;
}

Graph random_graph(std::mt19937& rng) {
  std::uniform_int_distribution<int> size(4, 10);
  std::bernoulli_distribution flip(0.5);
  int n = size(rng);
  std::vector<Edge> edges;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) {
      if (flip(rng)) edges.push_back({u, v});
    }
  }
  return Graph(n, std::move(edges));
}

// Criterion 7: structural properties checked by enumeration and random
// sampling with fixed seeds.
Gate check_properties() {
  Gate g;

  std::mt19937 rng(424242);
  for (int i = 0; i < 200; ++i) {
    Graph graph = random_graph(rng);
    double base = closeness(graph);
    const std::vector<Edge> absent = graph.non_edges();
    if (!absent.empty()) {
      std::uniform_int_distribution<std::size_t> pick(0, absent.size() - 1);
      Edge added = absent[pick(rng)];
      g.require(closeness(mutate_copy(graph, {}, added)) > base,
                "adding " + to_string(added) + " did not raise closeness");
    }
    if (graph.edge_count() > 0) {
      std::uniform_int_distribution<std::size_t> pick(
          0, graph.edges().size() - 1);
      Edge removed = graph.edges()[pick(rng)];
      g.require(closeness(mutate_copy(graph, removed, {})) < base,
                "deleting " + to_string(removed) + " did not lower closeness");
    }
  }

  std::mt19937 relabel_rng(9001);
  for (int i = 0; i < 50; ++i) {
    Graph graph = random_graph(relabel_rng);
    std::vector<int> perm(graph.vertex_count() + 1);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin() + 1, perm.end(), relabel_rng);
    g.require(closeness(relabel(graph, perm)) == closeness(graph),
              "relabeling changed closeness on sample " + std::to_string(i));
  }

  PayoffTable table = build_payoff_table(cycle_graph(6));
  double previous = -1.0;
  for (double alpha : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    double optimum = decide(table, Criterion::hurwicz(alpha)).optimum;
    g.require(optimum >= previous - 1e-12,
              "hurwicz optimum fell between alpha steps");
    previous = optimum;
  }

  for (int n = 4; n <= 8; ++n) {
    for (int total = 2; total <= 8; ++total) {
      double single = closeness(cycle_tails_graph(n, total, 0));
      for (int q = 0; q <= total; ++q) {
        double split = closeness(cycle_tails_graph(n, total - q, q));
        g.require(split >= single - 1e-12,
                  "a two-tail split beat the single tail at n=" +
                      std::to_string(n) + ", total=" + std::to_string(total));
      }
      g.require_near("single-tail formula n=" + std::to_string(n) +
                         ", p=" + std::to_string(total),
                     cycle_tail_min(n, total), single, 1e-9);
    }
  }

  for (int p = 0; p <= 4; ++p) {
    for (int k = 2; k <= 11; ++k) {
      g.require(cycle_tail_min(2 * (k + 1), p) > cycle_tail_min(2 * k, p),
                "even-cycle tail minimum not increasing at k=" +
                    std::to_string(k) + ", p=" + std::to_string(p));
      g.require(cycle_tail_min(2 * k + 3, p) > cycle_tail_min(2 * k + 1, p),
                "odd-cycle tail minimum not increasing at k=" +
                    std::to_string(k) + ", p=" + std::to_string(p));
    }
  }

  return g;
}

}  // namespace

int main() {
  struct Item {
    const char* label;
    Gate (*run)();
  };
  const Item items[] = {
      {"4-path payoff table", check_path_table},
      {"fixture metrics", check_fixture_metrics},
      {"6-cycle chord comparison", check_cycle_chords},
      {"closeness formula sweeps", check_closeness_sweeps},
      {"decision formula sweeps", check_decision_sweeps},
      {"growth formula sweeps", check_growth_sweeps},
      {"property suites", check_properties},
  };
  bool all_pass = true;
  std::size_t index = 0;
  for (const Item& item : items) {
    ++index;
    Gate gate = item.run();
    bool ok = gate.failures.empty();
    all_pass = all_pass && ok;
    std::printf("criterion %zu (%s): %s\n", index, item.label,
                ok ? "PASS" : "FAIL");
    for (const std::string& f : gate.failures) {
      std::printf("    %s\n", f.c_str());
    }
  }
  return all_pass ? 0 : 1;
}
